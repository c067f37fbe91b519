//! Exact search for the global, local and folded covering numbers and the
//! matching packing numbers. Everything here is exponential and meant for
//! small hosts; every search takes a [`Budget`] and reports `Unknown` rather
//! than guessing when it runs out.

mod cycles;
mod edge_search;
pub(crate) mod extend;
mod packing;
mod stars;

use std::time::{Duration, Instant};

use crate::classes::TemplateClass;
use crate::cover::{CoverCertificate, Mode};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use packing::compute_packing;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget { max_nodes: Some(max_nodes), time_limit: None }
    }

    pub fn seconds(secs: f64) -> Self {
        Budget { max_nodes: None, time_limit: Some(Duration::from_secs_f64(secs)) }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Feasible,
    Infeasible,
    Infinite,
    /// The budget ran out before the question was settled.
    Unknown,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Feasible => "feasible",
            Status::Infeasible => "infeasible",
            Status::Infinite => "infinite",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: Status,
    pub value: Option<usize>,
    pub certificate: Option<CoverCertificate>,
    pub nodes_explored: u64,
    pub time_limit_hit: bool,
}

impl SolveResult {
    fn bare(status: Status, nodes: u64, hit: bool) -> Self {
        SolveResult { status, value: None, certificate: None, nodes_explored: nodes, time_limit_hit: hit }
    }

    pub fn is_feasible(&self) -> bool {
        self.status == Status::Feasible
    }
}

/// Node and wall-clock accounting shared by all searches.
pub(crate) struct Meter {
    budget: Budget,
    start: Instant,
    pub(crate) nodes: u64,
    pub(crate) exhausted: bool,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter { budget, start: Instant::now(), nodes: 0, exhausted: false }
    }

    /// Counts one node; false once the budget is gone.
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|m| self.nodes > m) {
            self.exhausted = true;
        } else if let Some(limit) = self.budget.time_limit {
            if self.nodes.is_multiple_of(1024) && self.start.elapsed() > limit {
                self.exhausted = true;
            }
        }
        !self.exhausted
    }

    fn finish(&self, found: Option<CoverCertificate>, value: usize) -> SolveResult {
        match found {
            Some(c) => SolveResult {
                status: Status::Feasible,
                value: Some(value),
                certificate: Some(c),
                nodes_explored: self.nodes,
                time_limit_hit: false,
            },
            None if self.exhausted => SolveResult::bare(Status::Unknown, self.nodes, true),
            None => SolveResult::bare(Status::Infeasible, self.nodes, false),
        }
    }
}

/// Edges ordered by breadth-first discovery of their endpoints, so that
/// consecutive edges tend to share vertices.
pub(crate) fn bfs_edge_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut pos = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if pos[s] != usize::MAX {
            continue;
        }
        pos[s] = next;
        next += 1;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if pos[w] == usize::MAX {
                    pos[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&e| {
        let (u, v) = g.edges()[e];
        (pos[u].min(pos[v]), pos[u].max(pos[v]))
    });
    order
}

fn guard(g: &Graph) -> Result<()> {
    if g.vertex_count() > 128 {
        return Err(Error::SizeGuard { what: "solver vertices", size: g.vertex_count(), limit: 128 });
    }
    if g.edge_count() > 128 {
        return Err(Error::SizeGuard { what: "solver edges", size: g.edge_count(), limit: 128 });
    }
    Ok(())
}

/// Some edge of `g` that lies in no subgraph of `g` belonging to `class`.
fn uncoverable_edge(g: &Graph, class: TemplateClass) -> Option<(usize, usize)> {
    if class.contains_edge() {
        return None;
    }
    cycles::bridges(g).into_iter().next()
}

fn empty_cover(g: &Graph) -> CoverCertificate {
    CoverCertificate::new(g.vertex_count())
}

/// Is there an injective cover with at most `k` components?
pub fn decide_global(g: &Graph, class: TemplateClass, k: usize, budget: Budget) -> Result<SolveResult> {
    guard(g)?;
    if g.edge_count() == 0 {
        return Ok(Meter::new(budget).finish(Some(empty_cover(g)), k));
    }
    if uncoverable_edge(g, class).is_some() {
        return Ok(SolveResult::bare(Status::Infinite, 0, false));
    }
    let mut meter = Meter::new(budget);
    let found = if class == TemplateClass::CycleCollection {
        cycles::cover_global(g, k, &mut meter)?
    } else {
        edge_search::cover_bags(g, class, edge_search::BagMode::Global(k), &mut meter)
    };
    Ok(meter.finish(found, k))
}

/// Is there an injective cover in which every vertex lies in at most `j`
/// components?
pub fn decide_local(g: &Graph, class: TemplateClass, j: usize, budget: Budget) -> Result<SolveResult> {
    guard(g)?;
    if g.edge_count() == 0 {
        return Ok(Meter::new(budget).finish(Some(empty_cover(g)), j));
    }
    if uncoverable_edge(g, class).is_some() {
        return Ok(SolveResult::bare(Status::Infinite, 0, false));
    }
    let mut meter = Meter::new(budget);
    let found = if class == TemplateClass::CycleCollection {
        cycles::cover_local(g, j, &mut meter)?
    } else if class == TemplateClass::StarForest && g.vertex_count() <= stars::MAX_VERTICES {
        stars::cover_local(g, j, &mut meter)
    } else {
        edge_search::cover_bags(g, class, edge_search::BagMode::Local(j), &mut meter)
    };
    Ok(meter.finish(found, j))
}

/// Is there a cover (not necessarily injective) with at most `j` preimages
/// per vertex? Searched as a template inside the `j`-fold blowup.
pub fn decide_folded(g: &Graph, class: TemplateClass, j: usize, budget: Budget) -> Result<SolveResult> {
    if j == 0 {
        return Err(Error::OutOfRange("folded parameter must be at least 1".into()));
    }
    let mut res = decide_constrained_folded(g, class, &vec![j; g.vertex_count()], budget)?;
    if res.is_feasible() {
        res.value = Some(j);
    }
    Ok(res)
}

/// Folded cover with `|φ⁻¹(v)| ≤ bounds[v]` for every vertex.
pub fn decide_constrained_folded(
    g: &Graph,
    class: TemplateClass,
    bounds: &[usize],
    budget: Budget,
) -> Result<SolveResult> {
    guard(g)?;
    if bounds.len() != g.vertex_count() {
        return Err(Error::HostMismatch { cert: bounds.len(), graph: g.vertex_count() });
    }
    let mut meter = Meter::new(budget);
    if g.edges().iter().any(|&(u, v)| bounds[u] == 0 || bounds[v] == 0) {
        return Ok(meter.finish(None, 0));
    }
    let found = edge_search::cover_folded(g, class, bounds, &mut meter);
    let max = bounds.iter().copied().max().unwrap_or(0);
    Ok(meter.finish(found, max))
}

/// Lower bound on the covering number used to start the deepening.
pub fn lower_bound(g: &Graph, class: TemplateClass) -> usize {
    use TemplateClass::*;
    if g.edge_count() == 0 {
        return 0;
    }
    let d = g.max_degree();
    match class {
        LinearForest | CycleCollection => d.div_ceil(2),
        Matching => d,
        _ => 1,
    }
}

/// Smallest parameter that admits a cover, with a certificate.
pub fn compute_number(g: &Graph, class: TemplateClass, mode: Mode, budget: Budget) -> Result<SolveResult> {
    guard(g)?;
    if g.edge_count() == 0 {
        let mut r = Meter::new(budget).finish(Some(empty_cover(g)), 0);
        r.value = Some(0);
        return Ok(r);
    }
    if mode != Mode::Folded && uncoverable_edge(g, class).is_some() {
        return Ok(SolveResult::bare(Status::Infinite, 0, false));
    }
    let d = g.max_degree();
    let cap = match (mode, class) {
        (Mode::Global, _) => g.edge_count(),
        (_, TemplateClass::CycleCollection) => 2 * d,
        _ => d,
    };
    let start = Instant::now();
    let mut nodes = 0;
    for t in lower_bound(g, class).max(1)..=cap {
        let left = Budget {
            max_nodes: budget.max_nodes.map(|m| m.saturating_sub(nodes)),
            time_limit: budget.time_limit.map(|l| l.saturating_sub(start.elapsed())),
        };
        let mut r = match mode {
            Mode::Global => decide_global(g, class, t, left)?,
            Mode::Local => decide_local(g, class, t, left)?,
            Mode::Folded => decide_folded(g, class, t, left)?,
        };
        nodes += r.nodes_explored;
        r.nodes_explored = nodes;
        match r.status {
            Status::Infeasible => continue,
            _ => return Ok(r),
        }
    }
    unreachable!("the cap always admits a cover")
}
