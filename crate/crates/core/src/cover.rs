//! Cover certificates: a disjoint union of template graphs together with a
//! vertex map into the host, checked edge by edge.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::classes::{recognize, TemplateClass};
use crate::error::{Error, Result};
use crate::graph::{parse_usizes, Graph, Walk};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Global,
    Local,
    Folded,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Global, Mode::Local, Mode::Folded];

    pub fn name(self) -> &'static str {
        match self {
            Mode::Global => "global",
            Mode::Local => "local",
            Mode::Folded => "folded",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse { line: 0, msg: format!("unknown mode `{s}`") })
    }
}

/// One template graph and where its vertices land in the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub template: Graph,
    pub map: Vec<usize>,
}

impl Component {
    pub fn new(template: Graph, map: Vec<usize>) -> Self {
        Component { template, map }
    }

    /// Identity-mapped copy of a host subgraph: the template has one vertex per
    /// entry of `vertices` and the host edges listed in `edges`.
    pub fn from_host_edges(vertices: &[usize], edges: &[(usize, usize)]) -> Self {
        let pos = |x: usize| vertices.iter().position(|&v| v == x).expect("edge endpoint in vertex list");
        let template = Graph::new(vertices.len(), edges.iter().map(|&(u, v)| (pos(u), pos(v)))).expect("template");
        Component { template, map: vertices.to_vec() }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = self.map.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCertificate {
    pub host_vertices: usize,
    pub components: Vec<Component>,
}

impl CoverCertificate {
    pub fn new(host_vertices: usize) -> Self {
        CoverCertificate { host_vertices, components: Vec::new() }
    }

    pub fn size(&self) -> usize {
        self.components.len()
    }

    /// `|φ⁻¹(v)|` for every host vertex.
    pub fn preimage_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.host_vertices];
        for c in &self.components {
            for &v in &c.map {
                if v < self.host_vertices {
                    counts[v] += 1;
                }
            }
        }
        counts
    }

    pub fn max_preimage(&self) -> usize {
        self.preimage_counts().into_iter().max().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "host {}", self.host_vertices).unwrap();
        for c in &self.components {
            s.push_str("component\n");
            for (t, &h) in c.map.iter().enumerate() {
                writeln!(s, "tv {t} {h}").unwrap();
            }
            for &(a, b) in c.template.edges() {
                writeln!(s, "te {a} {b}").unwrap();
            }
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut host = None;
        type Block = (Vec<(usize, usize)>, Vec<(usize, usize)>);
        let mut blocks: Vec<Block> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let pair = || -> Result<(usize, usize)> {
                match parse_usizes(rest).as_deref() {
                    Some([a, b]) => Ok((*a, *b)),
                    _ => Err(err("expected two integers")),
                }
            };
            match key {
                "host" => host = Some(rest.trim().parse().map_err(|_| err("bad host size"))?),
                "component" => blocks.push((Vec::new(), Vec::new())),
                "tv" => blocks.last_mut().ok_or_else(|| err("`tv` outside a component"))?.0.push(pair()?),
                "te" => blocks.last_mut().ok_or_else(|| err("`te` outside a component"))?.1.push(pair()?),
                _ => return Err(err("unknown directive")),
            }
        }
        let host_vertices = host.ok_or(Error::Parse { line: 0, msg: "missing `host` line".into() })?;
        let mut components = Vec::new();
        for (tvs, tes) in blocks {
            let k = tvs.len();
            let mut map = vec![usize::MAX; k];
            for (t, h) in tvs {
                if t >= k || map[t] != usize::MAX {
                    return Err(Error::Parse { line: 0, msg: format!("template vertex ids must be 0..{k}") });
                }
                map[t] = h;
            }
            components.push(Component { template: Graph::new(k, tes)?, map });
        }
        Ok(CoverCertificate { host_vertices, components })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NotInClass { component: usize },
    NonEdge { component: usize, template_edge: (usize, usize), host: (usize, usize) },
    UncoveredEdge(usize, usize),
    NotInjective { component: usize },
    PartialMap { component: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotInClass { component } => write!(f, "component {component} is not in the template class"),
            Violation::NonEdge { component, template_edge: (a, b), host: (u, v) } => {
                write!(f, "component {component}: template edge {a}-{b} maps to non-edge {u}-{v}")
            }
            Violation::UncoveredEdge(u, v) => write!(f, "uncovered edge {u}-{v}"),
            Violation::NotInjective { component } => write!(f, "component {component} is not injective"),
            Violation::PartialMap { component } => write!(f, "component {component} has a partial vertex map"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub size: usize,
    pub max_preimage: usize,
    pub injective: bool,
    pub covered_edge_count: usize,
}

/// Checks `cert` against the cover definition and reports every failure.
pub fn verify_cover(g: &Graph, cert: &CoverCertificate, class: TemplateClass, mode: Mode) -> Result<CoverReport> {
    let n = g.vertex_count();
    if cert.host_vertices != n {
        return Err(Error::HostMismatch { cert: cert.host_vertices, graph: n });
    }
    let mut violations = Vec::new();
    let mut hit = vec![false; g.edge_count()];
    let mut injective = true;
    for (ci, c) in cert.components.iter().enumerate() {
        if let Some(&v) = c.map.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if c.map.len() != c.template.vertex_count() {
            violations.push(Violation::PartialMap { component: ci });
            continue;
        }
        if !recognize(class, &c.template) {
            violations.push(Violation::NotInClass { component: ci });
        }
        for &(a, b) in c.template.edges() {
            let (u, v) = (c.map[a], c.map[b]);
            match g.edge_index(u, v) {
                Some(e) if u != v => hit[e] = true,
                _ => violations.push(Violation::NonEdge { component: ci, template_edge: (a, b), host: (u, v) }),
            }
        }
        if !c.is_injective() {
            injective = false;
            if mode != Mode::Folded {
                violations.push(Violation::NotInjective { component: ci });
            }
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if !hit[e] {
            violations.push(Violation::UncoveredEdge(u, v));
        }
    }
    let covered_edge_count = hit.iter().filter(|&&h| h).count();
    Ok(CoverReport {
        valid: violations.is_empty(),
        violations,
        size: cert.size(),
        max_preimage: cert.max_preimage(),
        injective,
        covered_edge_count,
    })
}

/// Restriction of a cover to the host minus `removed` edges: template edges
/// landing on removed host edges are deleted, template vertices left
/// isolated by the deletion are dropped, and every template is split into
/// its connected components.
pub fn restrict_cover(cert: &CoverCertificate, removed: &[(usize, usize)]) -> CoverCertificate {
    let mut gone: Vec<(usize, usize)> = removed.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    gone.sort_unstable();
    let is_gone = |u: usize, v: usize| gone.binary_search(&(u.min(v), u.max(v))).is_ok();
    let mut out = CoverCertificate::new(cert.host_vertices);
    for c in &cert.components {
        let t = &c.template;
        let kept = t.edge_subgraph(|a, b| !is_gone(c.map[a], c.map[b]));
        for comp in kept.components() {
            if comp.len() == 1 && kept.degree(comp[0]) == 0 && t.degree(comp[0]) > 0 {
                continue;
            }
            let sub = kept.induced(&comp);
            let map = comp.iter().map(|&a| c.map[a]).collect();
            out.components.push(Component { template: sub, map });
        }
    }
    out
}

/// Each walk of edge-length `m` becomes a path template on `m + 1` vertices.
pub fn walks_to_certificate(g: &Graph, walks: &[Walk]) -> Result<CoverCertificate> {
    let mut cert = CoverCertificate::new(g.vertex_count());
    for w in walks {
        w.validate(g)?;
        if w.0.is_empty() {
            continue;
        }
        let m = w.edge_len();
        let template = Graph::new(m + 1, (0..m).map(|i| (i, i + 1)))?;
        cert.components.push(Component { template, map: w.0.clone() });
    }
    Ok(cert)
}

/// Identity cover with a single component equal to the host.
pub fn identity_cover(g: &Graph) -> CoverCertificate {
    let template = g.edge_subgraph(|_, _| true);
    CoverCertificate {
        host_vertices: g.vertex_count(),
        components: vec![Component { template, map: (0..g.vertex_count()).collect() }],
    }
}
