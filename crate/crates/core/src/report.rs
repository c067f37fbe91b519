//! Desk-scale checks of the headline results. Each criterion runs exact
//! computations on fixed families or on a seeded random corpus and reports
//! pass or fail with a short note; nothing is sampled or estimated.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::classes::{recognize, TemplateClass};
use crate::construct::{fca_core, flac_cover, gadget, krausz_cover, slug_cover, validate_sequence, GadgetKind};
use crate::cover::{verify_cover, Mode};
use crate::graph::{complete, complete_bipartite, line_graph, petersen, spider, Graph};
use crate::orient::{arboricity, local_star_arboricity, pseudoarboricity};
use crate::random::{gnp, random_sequence, realized, rng};
use crate::solver::{compute_number, decide_constrained_folded, Budget, SolveResult, Status};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Optimum with a certificate that verifies at that value; `usize::MAX`
/// stands for no cover at all, `None` for an exhausted budget.
fn solve(g: &Graph, class: TemplateClass, mode: Mode, budget: Budget) -> Result<Option<usize>, String> {
    let r: SolveResult = compute_number(g, class, mode, budget).map_err(|e| e.to_string())?;
    match r.status {
        Status::Unknown => Ok(None),
        Status::Infinite => Ok(Some(usize::MAX)),
        Status::Feasible => {
            let v = r.value.unwrap();
            let cert = r.certificate.as_ref().ok_or("feasible result without certificate")?;
            let rep = verify_cover(g, cert, class, mode).map_err(|e| e.to_string())?;
            let stat = if mode == Mode::Global { rep.size } else { rep.max_preimage };
            ensure(rep.valid && stat <= v, || format!("{class} {mode}: certificate does not verify"))?;
            Ok(Some(v))
        }
        s => Err(format!("{class} {mode}: unexpected status {}", s.name())),
    }
}

fn exact(g: &Graph, class: TemplateClass, mode: Mode) -> Result<usize, String> {
    solve(g, class, mode, Budget::unlimited())?.ok_or_else(|| "unlimited budget exhausted".into())
}

fn petersen_cycles(_seed: u64) -> Outcome {
    let p = petersen();
    let got: Vec<usize> = [Mode::Global, Mode::Local, Mode::Folded]
        .into_iter()
        .map(|m| exact(&p, TemplateClass::CycleCollection, m))
        .collect::<Result<_, _>>()?;
    ensure(got == [3, 3, 2], || format!("got {got:?}, expected [3, 3, 2]"))?;
    Ok("c_g=3 c_l=3 c_f=2".into())
}

fn complete_bipartite_formulas(_seed: u64) -> Outcome {
    let mut notes = Vec::new();
    for (m, n) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5)] {
        let g = complete_bipartite(m, n).unwrap();
        let t = exact(&g, TemplateClass::CaterpillarForest, Mode::Global)?;
        let i = exact(&g, TemplateClass::CaterpillarForest, Mode::Folded)?;
        let t_formula = (m * n).div_ceil(m + n - 1);
        let i_formula = (m * n + 1).div_ceil(m + n);
        ensure(t == t_formula && i == i_formula, || {
            format!("K_{m},{n}: global {t} vs {t_formula}, folded {i} vs {i_formula}")
        })?;
        notes.push(format!("K{m},{n}:{t}/{i}"));
    }
    Ok(notes.join(" "))
}

fn local_folded_separation(_seed: u64) -> Outcome {
    let g = complete_bipartite(3, 5).unwrap();
    let l = exact(&g, TemplateClass::CaterpillarForest, Mode::Local)?;
    let f = exact(&g, TemplateClass::CaterpillarForest, Mode::Folded)?;
    ensure(l == 3 && f == 2, || format!("local {l}, folded {f}"))?;
    Ok("ca_l(K3,5)=3 > ca_f(K3,5)=2".into())
}

fn arboricity_bracket(seed: u64) -> Outcome {
    let mut r = rng(seed.wrapping_add(4));
    let mut gaps = [0usize; 2];
    for i in 0..200 {
        let n = 2 + i % 8;
        let g = gnp(&mut r, n, 0.15 + 0.7 * ((i * 37 % 100) as f64 / 100.0));
        let p = pseudoarboricity(&g).value;
        let (a, _) = arboricity(&g).map_err(|e| e.to_string())?;
        let lsa = local_star_arboricity(&g);
        ensure(p <= a && a <= lsa.value && lsa.value <= p + 1, || format!("bracket fails on {:?}", g.edges()))?;
        let brute = exact(&g, TemplateClass::StarForest, Mode::Local)?;
        ensure(brute == lsa.value, || format!("flow {} vs search {brute} on {:?}", lsa.value, g.edges()))?;
        gaps[lsa.value - p] += 1;
    }
    Ok(format!("200 graphs; sa_l=p on {}, sa_l=p+1 on {}", gaps[0], gaps[1]))
}

fn euler_folded_linear(seed: u64) -> Outcome {
    let mut r = rng(seed.wrapping_add(5));
    let mut odd_everywhere = 0;
    for i in 0..200 {
        let n = 2 + i % 29;
        let g = gnp(&mut r, n, 0.05 + 0.5 * ((i * 13 % 50) as f64 / 50.0));
        if g.edge_count() == 0 {
            continue;
        }
        let cert = flac_cover(&g).map_err(|e| e.to_string())?;
        let rep = verify_cover(&g, &cert, TemplateClass::LinearForest, Mode::Folded).map_err(|e| e.to_string())?;
        let d = g.max_degree();
        ensure(rep.valid && rep.max_preimage <= (d + 1).div_ceil(2), || format!("graph {i}: {:?}", rep))?;
        let odd_in_each =
            g.components().iter().filter(|c| c.len() > 1).all(|c| c.iter().any(|&v| g.degree(v) % 2 == 1));
        if odd_in_each {
            odd_everywhere += 1;
            ensure(rep.max_preimage <= d.div_ceil(2), || format!("graph {i}: odd case exceeds ceil(D/2)"))?;
        }
    }
    Ok(format!("200 graphs, {odd_everywhere} with odd vertices in every component"))
}

fn slug_covers(seed: u64) -> Outcome {
    let mut r = rng(seed.wrapping_add(6));
    for i in 0..60 {
        let k = 3 + i % 2;
        let n = k + 2 + (i * 7) % (40 - k - 1);
        let seq = random_sequence(&mut r, k, n, 0.75, true);
        let g = realized(&seq);
        let cert = slug_cover(&g, &seq).map_err(|e| format!("case {i}: {e}"))?;
        let rep = verify_cover(&g, &cert, TemplateClass::Interval, Mode::Local).map_err(|e| e.to_string())?;
        ensure(rep.valid && rep.injective && rep.max_preimage <= k, || format!("case {i}: {rep:?}"))?;
        ensure(cert.components.iter().all(|c| recognize(TemplateClass::Interval, &c.template)), || {
            format!("case {i}: component not interval")
        })?;
    }
    Ok("60 random partial simple k-trees, k in {3,4}, n <= 40".into())
}

fn fca_core_infeasible(_seed: u64) -> Outcome {
    for i in [1, 2, 17] {
        let core = fca_core(2, i).map_err(|e| e.to_string())?;
        let bounds: Vec<usize> =
            (0..core.vertex_count()).map(|v| if core.label(v) == Some("c") { 1 } else { 2 }).collect();
        let r = decide_constrained_folded(&core, TemplateClass::CaterpillarForest, &bounds, Budget::unlimited())
            .map_err(|e| e.to_string())?;
        ensure(r.status == Status::Infeasible, || format!("core {i}: {}", r.status.name()))?;
    }
    Ok("no caterpillar cover with c:1 s:2 a:2".into())
}

fn spider_interval_number(_seed: u64) -> Outcome {
    let v = exact(&spider(3, 2).unwrap(), TemplateClass::CaterpillarForest, Mode::Folded)?;
    ensure(v == 2, || format!("got {v}"))?;
    let g = gadget(GadgetKind::ITw, 1).map_err(|e| e.to_string())?.graph;
    let w = exact(&g, TemplateClass::CaterpillarForest, Mode::Folded)?;
    ensure(w == 2, || format!("gadget gives {w}"))?;
    Ok("ca_f(spider(3,2)) = 2 >= k+1".into())
}

fn stw_witness(_seed: u64) -> Outcome {
    let gd = gadget(GadgetKind::TStw, 3).map_err(|e| e.to_string())?;
    let seq = gd.sequence.ok_or("no sequence emitted")?;
    let check = validate_sequence(&seq, true);
    ensure(check.is_ok() && seq.width == 3, || format!("{:?}", check.violations))?;
    ensure(check.realized.edges() == gd.graph.edges(), || "sequence realizes a different graph".into())?;
    Ok(format!("{} vertices, simple width 3", gd.graph.vertex_count()))
}

/// Fewest classes in a partition of the edges where every component of
/// every class spans a clique of `g`; completing each component to its clique
/// gives a cover by clique collections, and any such cover restricts to one.
fn clique_cover_oracle(g: &Graph) -> usize {
    fn spans_cliques(g: &Graph, edges: &[(usize, usize)]) -> bool {
        let n = g.vertex_count();
        let mut comp: Vec<usize> = (0..n).collect();
        fn root(c: &mut [usize], x: usize) -> usize {
            if c[x] == x {
                x
            } else {
                let r = root(c, c[x]);
                c[x] = r;
                r
            }
        }
        for &(u, v) in edges {
            let (a, b) = (root(&mut comp, u), root(&mut comp, v));
            comp[a] = b;
        }
        let touched: Vec<usize> = (0..n).filter(|&v| edges.iter().any(|&(a, b)| a == v || b == v)).collect();
        touched.iter().enumerate().all(|(i, &a)| {
            touched[i + 1..].iter().all(|&b| root(&mut comp, a) != root(&mut comp, b) || g.has_edge(a, b))
        })
    }
    fn search(g: &Graph, e: usize, classes: &mut Vec<Vec<(usize, usize)>>, k: usize) -> bool {
        if e == g.edge_count() {
            return true;
        }
        let edge = g.edges()[e];
        for c in 0..classes.len().min(k) {
            classes[c].push(edge);
            if spans_cliques(g, &classes[c]) && search(g, e + 1, classes, k) {
                return true;
            }
            classes[c].pop();
        }
        if classes.len() < k {
            classes.push(vec![edge]);
            if search(g, e + 1, classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }
    (0..).find(|&k| search(g, 0, &mut Vec::new(), k)).unwrap()
}

fn line_graph_cliques(_seed: u64) -> Outcome {
    for n in 2..=6 {
        let (l, cert) = krausz_cover(&complete(n).unwrap());
        let rep = verify_cover(&l, &cert, TemplateClass::CliqueCollection, Mode::Local).map_err(|e| e.to_string())?;
        ensure(rep.valid && rep.injective && rep.max_preimage <= 2, || format!("L(K{n}): {rep:?}"))?;
    }
    let mut vals = Vec::new();
    for n in [4, 5] {
        let (l, _) = line_graph(&complete(n).unwrap());
        let solver = exact(&l, TemplateClass::CliqueCollection, Mode::Global)?;
        let oracle = clique_cover_oracle(&l);
        ensure(solver == oracle, || format!("L(K{n}): solver {solver}, oracle {oracle}"))?;
        vals.push(format!("c_g(L(K{n}))={solver}"));
    }
    Ok(format!("Krausz covers valid for n <= 6; {}", vals.join(" ")))
}

fn inclusion_suite(seed: u64) -> Outcome {
    use TemplateClass::*;
    let budget = Budget::nodes(200_000);
    let mut r = rng(seed.wrapping_add(11));
    let (mut graphs, mut skipped, mut checks) = (0, 0, 0);
    let modes = [Mode::Global, Mode::Local, Mode::Folded];
    // pairs (smaller class, larger class)
    let inclusions = [
        (Matching, LinearForest),
        (Matching, StarForest),
        (LinearForest, CaterpillarForest),
        (StarForest, CaterpillarForest),
        (CaterpillarForest, Interval),
        (CaterpillarForest, Forest),
        (Forest, Pseudoforest),
        (CycleCollection, Pseudoforest),
    ];
    for i in 0..40 {
        let n = 3 + i % 6;
        let g = gnp(&mut r, n, 0.3 + 0.4 * ((i % 5) as f64 / 4.0));
        if g.edge_count() == 0 {
            continue;
        }
        graphs += 1;
        let mut val = HashMap::new();
        for class in TemplateClass::ALL {
            for mode in modes {
                match solve(&g, class, mode, budget)? {
                    Some(v) => {
                        val.insert((class, mode), v);
                    }
                    None => skipped += 1,
                }
            }
        }
        let get = |c, m| val.get(&(c, m)).copied();
        for class in TemplateClass::ALL {
            if let (Some(a), Some(b), Some(c)) =
                (get(class, Mode::Global), get(class, Mode::Local), get(class, Mode::Folded))
            {
                checks += 1;
                ensure(a >= b && b >= c, || format!("{class} on {:?}: {a} {b} {c}", g.edges()))?;
            }
            if class.properties().closed_under_merging_within_components {
                if let (Some(b), Some(c)) = (get(class, Mode::Local), get(class, Mode::Folded)) {
                    checks += 1;
                    ensure(b == c, || format!("{class} local {b} != folded {c}"))?;
                }
            }
        }
        for (small, large) in inclusions {
            for mode in modes {
                if let (Some(a), Some(b)) = (get(small, mode), get(large, mode)) {
                    checks += 1;
                    ensure(a >= b, || format!("{small} < {large} in {mode} on {:?}", g.edges()))?;
                }
            }
        }
        if g.is_bipartite() {
            for mode in modes {
                if let (Some(a), Some(b)) = (get(Interval, mode), get(CaterpillarForest, mode)) {
                    checks += 1;
                    ensure(a == b, || format!("bipartite {mode}: interval {a} vs caterpillar {b}"))?;
                }
            }
        }
    }
    Ok(format!("{graphs} graphs, {checks} relations checked, {skipped} solves over budget"))
}

/// One row of the report.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub note: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{tag}] {:>2} {}: {} (exact, {:.2}s of {}s)",
            self.id,
            self.name,
            self.note,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

type Check = fn(u64) -> Outcome;

const CRITERIA: [(usize, &str, u64, Check); 11] = [
    (1, "petersen cycle covers", 300, petersen_cycles),
    (2, "complete bipartite caterpillar formulas", 600, complete_bipartite_formulas),
    (3, "local vs folded separation on K3,5", 600, local_folded_separation),
    (4, "pseudoarboricity / arboricity / local star arboricity bracket", 900, arboricity_bracket),
    (5, "euler-tour folded linear covers", 300, euler_folded_linear),
    (6, "slug covers of simple k-trees", 600, slug_covers),
    (7, "fca core has no constrained caterpillar cover", 1800, fca_core_infeasible),
    (8, "interval number of the k=1 treewidth gadget", 60, spider_interval_number),
    (9, "t_stw sequence is simple of width 3", 60, stw_witness),
    (10, "line-graph clique covers", 600, line_graph_cliques),
    (11, "covering-number inequalities and inclusions", 900, inclusion_suite),
];

/// Ids of all criteria, in order.
pub fn criterion_ids() -> Vec<usize> {
    CRITERIA.iter().map(|c| c.0).collect()
}

/// Runs one criterion; `None` for an unknown id. A check that finishes over
/// its time limit fails.
pub fn run_criterion(id: usize, seed: u64) -> Option<CriterionResult> {
    let &(id, name, limit, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let limit = Duration::from_secs(limit);
    let start = Instant::now();
    let outcome = check(seed);
    let elapsed = start.elapsed();
    let (passed, note) = match outcome {
        Ok(msg) if elapsed > limit => (false, format!("{msg}; over time limit")),
        Ok(msg) => (true, msg),
        Err(msg) => (false, msg),
    };
    Some(CriterionResult { id, name, passed, note, elapsed, limit })
}

/// Runs every criterion. Seed 0 gives the reference corpus.
pub fn run_all(seed: u64) -> Vec<CriterionResult> {
    CRITERIA.iter().filter_map(|c| run_criterion(c.0, seed)).collect()
}
