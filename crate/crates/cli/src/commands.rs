use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use graphcover::classes::{find_asteroidal_triple, find_chordless_cycle};
use graphcover::construct::{
    contact_star_forests, fca_core, flac_cover, gadget, krausz_cover, lift_to_simple, slug_cover, validate_sequence,
    ConstructionSequence, ContactRepresentation, GadgetKind,
};
use graphcover::graph::{generate, Graph};
use graphcover::orient::{arboricity, degeneracy, local_star_arboricity, orient_bounded, pseudoarboricity};
use graphcover::random::{gnp, random_sequence, realized, rng};
use graphcover::report::{criterion_ids, run_criterion};
use graphcover::{compute_number, compute_packing, recognize, verify_cover, Budget, CoverCertificate, Status};
use graphcover::{SolveResult, TemplateClass};

use crate::{BudgetArgs, Command, Target};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: graphcover::Error },
    #[error(transparent)]
    Input(#[from] graphcover::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        2
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// `key: value` lines, then one line of prose. The exit code rides along.
#[derive(Debug, Default)]
pub struct Output {
    fields: Vec<(String, String)>,
    prose: String,
    code: u8,
}

impl Output {
    fn put(&mut self, key: &str, value: impl fmt::Display) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    fn say(&mut self, prose: impl Into<String>) -> &mut Self {
        self.prose = prose.into();
        self
    }

    fn fail(&mut self, code: u8) -> &mut Self {
        self.code = code;
        self
    }

    pub fn code(&self) -> u8 {
        self.code
    }
}

impl fmt::Display for Output {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.fields {
            writeln!(f, "{k}: {v}")?;
        }
        if !self.prose.is_empty() {
            if !self.fields.is_empty() {
                writeln!(f)?;
            }
            writeln!(f, "{}", self.prose)?;
        }
        Ok(())
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source })
}

fn parsed<T>(path: &Path, parse: impl FnOnce(&str) -> graphcover::Result<T>) -> Result<T> {
    parse(&read(path)?).map_err(|source| CliError::Format { path: path.into(), source })
}

fn load_graph(path: &Path) -> Result<Graph> {
    parsed(path, Graph::from_text)
}

fn load_sequence(path: &Path) -> Result<ConstructionSequence> {
    parsed(path, ConstructionSequence::from_text)
}

fn budget(b: BudgetArgs) -> Budget {
    let mut out = Budget::unlimited();
    if let Some(n) = b.nodes {
        out = Budget::nodes(n);
    }
    if let Some(s) = b.seconds {
        out.time_limit = Budget::seconds(s).time_limit;
    }
    out
}

fn save_cert(out: &mut Output, path: Option<&Path>, cert: &CoverCertificate) -> Result<()> {
    if let Some(p) = path {
        write(p, &cert.to_text())?;
        out.put("certificate", p.display());
    }
    Ok(())
}

pub fn run(cmd: Command) -> Result<Output> {
    let mut out = Output::default();
    match cmd {
        Command::Gen { family, params, out: path, sequence, seed, keep } => {
            gen(&mut out, &family, &params, path.as_deref(), sequence.as_deref(), seed, keep)?
        }
        Command::Recognize { graph, class } => {
            let g = load_graph(&graph)?;
            let member = recognize(class, &g);
            out.put("class", class).put("member", member);
            if member {
                out.say(format!("the graph is a {class} graph"));
            } else {
                out.fail(1).say(non_member_reason(class, &g));
            }
        }
        Command::Solve { graph, target, budget: b, cert } => {
            let g = load_graph(&graph)?;
            let r = compute_number(&g, target.class, target.mode, budget(b))?;
            solved(&mut out, target, &r, cert.as_deref(), "covering number")?;
        }
        Command::Verify { graph, cert, target } => {
            let g = load_graph(&graph)?;
            let c = parsed(&cert, CoverCertificate::from_text)?;
            let rep = verify_cover(&g, &c, target.class, target.mode)?;
            out.put("class", target.class)
                .put("mode", target.mode)
                .put("valid", rep.valid)
                .put("size", rep.size)
                .put("max_preimage", rep.max_preimage)
                .put("injective", rep.injective)
                .put("covered_edges", format!("{}/{}", rep.covered_edge_count, g.edge_count()))
                .put("violations", rep.violations.len());
            if rep.valid {
                out.say("the certificate is a valid cover");
            } else {
                let list: Vec<String> = rep.violations.iter().map(|v| v.to_string()).collect();
                out.fail(1).say(format!("invalid certificate: {}", list.join("; ")));
            }
        }
        Command::Orient { graph, bound, out: path } => {
            let g = load_graph(&graph)?;
            let bound = bound.unwrap_or_else(|| pseudoarboricity(&g).value);
            out.put("bound", bound);
            match orient_bounded(&g, &vec![bound; g.vertex_count()])? {
                Ok(o) => {
                    out.put("feasible", true).put("max_out_degree", o.max_out_degree(&g));
                    if let Some(p) = &path {
                        write(p, &o.to_text(&g))?;
                        out.put("orientation", p.display());
                    }
                    out.say(format!("every out-degree is at most {bound}"));
                }
                Err(w) => {
                    out.put("feasible", false)
                        .put("witness_subset", join(&w.subset))
                        .put("witness_edges", w.induced_edges)
                        .put("witness_capacity", w.capacity)
                        .fail(1)
                        .say("the witness subset induces more edges than its vertices may point out of");
                }
            }
        }
        Command::Arbor { graph } => {
            let g = load_graph(&graph)?;
            let p = pseudoarboricity(&g);
            let (a, wit) = arboricity(&g)?;
            let (d, _) = degeneracy(&g);
            out.put("arboricity", a)
                .put("pseudoarboricity", p.value)
                .put("degeneracy", d)
                .put("arboricity_witness", join(&wit.subset))
                .put("pseudoarboricity_witness", join(&p.witness.subset))
                .say("each witness subset certifies its value as a lower bound");
        }
        Command::Lsa { graph, cert } => {
            let g = load_graph(&graph)?;
            let l = local_star_arboricity(&g);
            out.put("value", l.value).put("pseudoarboricity", l.pseudoarboricity);
            save_cert(&mut out, cert.as_deref(), &l.certificate)?;
            out.say("local star arboricity from a pseudoarboricity orientation");
        }
        Command::Flac { graph, cert } => {
            let g = load_graph(&graph)?;
            let c = flac_cover(&g)?;
            out.put("max_preimage", c.max_preimage())
                .put("components", c.size())
                .put("bound", (g.max_degree() + 1).div_ceil(2));
            save_cert(&mut out, cert.as_deref(), &c)?;
            out.say("folded linear-forest cover from Euler tours");
        }
        Command::Slug { graph, sequence, cert } => {
            let g = load_graph(&graph)?;
            let seq = load_sequence(&sequence)?;
            let c = slug_cover(&g, &seq)?;
            out.put("width", seq.width).put("max_preimage", c.max_preimage()).put("components", c.size());
            save_cert(&mut out, cert.as_deref(), &c)?;
            out.say("local interval cover with every vertex in at most width components");
        }
        Command::Lift { sequence, out: path } => {
            let seq = load_sequence(&sequence)?;
            let lifted = lift_to_simple(&seq)?;
            let check = validate_sequence(&lifted, true);
            out.put("width", seq.width)
                .put("lifted_width", lifted.width)
                .put("vertices", lifted.vertex_count())
                .put("simple", check.is_ok());
            match &path {
                Some(p) => {
                    write(p, &lifted.to_text())?;
                    out.put("sequence", p.display());
                }
                None => {
                    out.put("sequence", "-");
                }
            }
            out.say("the lifted sequence realizes the same graph");
            if path.is_none() {
                out.prose.push('\n');
                out.prose.push_str(lifted.to_text().trim_end());
            }
        }
        Command::Krausz { graph, line_graph, cert } => {
            let h = load_graph(&graph)?;
            let (l, c) = krausz_cover(&h);
            out.put("line_graph_vertices", l.vertex_count())
                .put("line_graph_edges", l.edge_count())
                .put("cliques", c.size())
                .put("max_preimage", c.max_preimage());
            if let Some(p) = &line_graph {
                write(p, &l.to_text())?;
                out.put("line_graph", p.display());
            }
            save_cert(&mut out, cert.as_deref(), &c)?;
            out.say("one clique per vertex of the input graph");
        }
        Command::Contacts { graph, representation, cert } => {
            let g = load_graph(&graph)?;
            let rep = parsed(&representation, ContactRepresentation::from_text)?;
            let c = contact_star_forests(&g, &rep)?;
            out.put("star_forests", c.size()).put("max_preimage", c.max_preimage());
            save_cert(&mut out, cert.as_deref(), &c)?;
            out.say("one star forest per end label");
        }
        Command::Pack { graph, target, budget: b, cert } => {
            let g = load_graph(&graph)?;
            let r = compute_packing(&g, target.class, target.mode, budget(b))?;
            solved(&mut out, target, &r, cert.as_deref(), "packing number")?;
        }
        Command::Report { seed, only } => report(&mut out, seed, &only)?,
    }
    Ok(out)
}

fn solved(out: &mut Output, target: Target, r: &SolveResult, cert: Option<&Path>, what: &str) -> Result<()> {
    out.put("class", target.class).put("mode", target.mode).put("status", r.status.name());
    match r.status {
        Status::Feasible => {
            out.put("value", r.value.expect("feasible results carry a value"));
            if let Some(c) = &r.certificate {
                save_cert(out, cert, c)?;
            }
            out.say(format!("exact {} {what}", target.mode));
        }
        Status::Infinite => {
            out.fail(1).say(format!("no {} template contains some edge, so no cover exists", target.class));
        }
        Status::Infeasible => {
            out.fail(1).say("no admissible structure exists");
        }
        Status::Unknown => {
            out.put("nodes", r.nodes_explored).fail(3).say("budget exhausted before the search finished");
        }
    }
    Ok(())
}

fn non_member_reason(class: TemplateClass, g: &Graph) -> String {
    if class == TemplateClass::Interval {
        if let Some(c) = find_chordless_cycle(g) {
            return format!("chordless cycle {}", join(&c));
        }
        if let Some((a, b, c)) = find_asteroidal_triple(g) {
            return format!("asteroidal triple {a} {b} {c}");
        }
    }
    format!("the graph is not a {class} graph")
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn num<T: std::str::FromStr>(family: &str, s: &str) -> Result<T> {
    s.parse().map_err(|_| CliError::Usage(format!("{family}: bad parameter `{s}`")))
}

fn gen(
    out: &mut Output,
    family: &str,
    params: &[String],
    path: Option<&Path>,
    seq_path: Option<&Path>,
    seed: u64,
    keep: f64,
) -> Result<()> {
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{family} takes {k} parameter(s), got {}", params.len())))
        }
    };
    let (g, seq) = match family {
        "gnp" => {
            arity(2)?;
            let n: usize = num(family, &params[0])?;
            let p: f64 = num(family, &params[1])?;
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::Usage("gnp: p must lie in [0, 1]".into()));
            }
            (gnp(&mut rng(seed), n, p), None)
        }
        "ktree" => {
            arity(2)?;
            let k: usize = num(family, &params[0])?;
            let n: usize = num(family, &params[1])?;
            if k == 0 || n < k + 1 || !(0.0..=1.0).contains(&keep) || k > 60 {
                return Err(CliError::Usage("ktree: need 1 <= k <= 60, n >= k + 1 and keep in [0, 1]".into()));
            }
            let seq = random_sequence(&mut rng(seed), k, n, keep, true);
            (realized(&seq), Some(seq))
        }
        "fca_core" => {
            arity(2)?;
            (fca_core(num(family, &params[0])?, num(family, &params[1])?)?, None)
        }
        _ => match family.parse::<GadgetKind>() {
            Ok(kind) => {
                arity(1)?;
                let gd = gadget(kind, num(family, &params[0])?)?;
                (gd.graph, gd.sequence)
            }
            Err(_) => {
                let nums: Vec<usize> = params.iter().map(|s| num(family, s)).collect::<Result<_>>()?;
                (generate(family, &nums)?, None)
            }
        },
    };
    if let Some(p) = seq_path {
        let Some(seq) = &seq else {
            return Err(CliError::Usage(format!("{family} carries no construction sequence")));
        };
        write(p, &seq.to_text())?;
    }
    match path {
        Some(p) => {
            write(p, &g.to_text())?;
            out.put("family", family)
                .put("vertices", g.vertex_count())
                .put("edges", g.edge_count())
                .put("seed", seed)
                .put("graph", p.display());
            if let Some(sp) = seq_path {
                out.put("sequence", sp.display());
            }
            out.say(format!("wrote {family}"));
        }
        None => out.prose = g.to_text().trim_end().to_string(),
    }
    Ok(())
}

fn report(out: &mut Output, seed: u64, only: &[usize]) -> Result<()> {
    let ids = if only.is_empty() { criterion_ids() } else { only.to_vec() };
    let mut rows = Vec::new();
    for id in ids {
        let row = run_criterion(id, seed).ok_or_else(|| CliError::Usage(format!("no criterion {id}")))?;
        rows.push(row);
    }
    let passed = rows.iter().filter(|r| r.passed).count();
    out.put("seed", seed).put("criteria", rows.len()).put("passed", passed).put("failed", rows.len() - passed);
    for r in &rows {
        out.put(&format!("criterion_{}", r.id), if r.passed { "pass" } else { "fail" });
    }
    out.say(rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n"));
    if passed < rows.len() {
        out.fail(1);
    }
    Ok(())
}
