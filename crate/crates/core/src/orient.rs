//! Degree-bounded orientations and the density parameters built on them:
//! pseudoarboricity, arboricity, degeneracy and local star arboricity.

use std::fmt::Write as _;

use crate::cover::{Component, CoverCertificate};
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{parse_usizes, Graph};

/// One head per host edge, indexed like `Graph::edges`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub heads: Vec<usize>,
}

impl Orientation {
    pub fn tail(&self, g: &Graph, e: usize) -> usize {
        let (u, v) = g.edges()[e];
        if self.heads[e] == u {
            v
        } else {
            u
        }
    }

    pub fn out_degrees(&self, g: &Graph) -> Vec<usize> {
        let mut out = vec![0; g.vertex_count()];
        for e in 0..g.edge_count() {
            out[self.tail(g, e)] += 1;
        }
        out
    }

    pub fn in_degrees(&self, g: &Graph) -> Vec<usize> {
        let mut inn = vec![0; g.vertex_count()];
        for &h in &self.heads {
            inn[h] += 1;
        }
        inn
    }

    pub fn max_out_degree(&self, g: &Graph) -> usize {
        self.out_degrees(g).into_iter().max().unwrap_or(0)
    }

    /// Heads are endpoints of their edges.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        self.heads.len() == g.edge_count() && g.edges().iter().zip(&self.heads).all(|(&(u, v), &h)| h == u || h == v)
    }

    pub fn to_text(&self, g: &Graph) -> String {
        let mut s = String::new();
        for e in 0..g.edge_count() {
            writeln!(s, "a {} {}", self.tail(g, e), self.heads[e]).unwrap();
        }
        s
    }

    pub fn from_text(g: &Graph, text: &str) -> Result<Self> {
        let mut heads = vec![usize::MAX; g.edge_count()];
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
            let rest = line.strip_prefix("a ").ok_or_else(|| err("expected `a <tail> <head>`"))?;
            let [t, h] = parse_usizes(rest)
                .as_deref()
                .and_then(|p| p.try_into().ok())
                .ok_or_else(|| err("expected two integers"))?;
            let e = g.edge_index(t, h).ok_or_else(|| err("not an edge of the graph"))?;
            heads[e] = h;
        }
        if let Some(e) = heads.iter().position(|&h| h == usize::MAX) {
            let (u, v) = g.edges()[e];
            return Err(Error::Parse { line: 0, msg: format!("edge {u}-{v} is not oriented") });
        }
        Ok(Orientation { heads })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityKind {
    /// `|E[S]| / (|S| - 1)`
    Arboricity,
    /// `|E[S]| / |S|`
    Pseudoarboricity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityWitness {
    pub subset: Vec<usize>,
    pub induced_edges: usize,
    pub kind: DensityKind,
}

impl DensityWitness {
    fn new(g: &Graph, subset: Vec<usize>, kind: DensityKind) -> Self {
        let induced_edges = g.induced_edge_count(&subset);
        DensityWitness { subset, induced_edges, kind }
    }

    /// The lower bound `⌈|E[S]| / d⌉` this subset certifies.
    pub fn bound(&self) -> usize {
        let d = match self.kind {
            DensityKind::Arboricity => self.subset.len().saturating_sub(1),
            DensityKind::Pseudoarboricity => self.subset.len(),
        };
        if d == 0 {
            0
        } else {
            self.induced_edges.div_ceil(d)
        }
    }

    /// Recounts the induced edges.
    pub fn check(&self, g: &Graph) -> bool {
        g.induced_edge_count(&self.subset) == self.induced_edges
    }
}

/// A vertex set whose induced edges exceed its total out-degree allowance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverloadWitness {
    pub subset: Vec<usize>,
    pub induced_edges: usize,
    pub capacity: usize,
}

/// Orientation with out-degree at most `alpha[v]` at every `v`, or a set
/// `S` with `|E[S]| > Σ_S alpha` read off a minimum cut.
pub fn orient_bounded(g: &Graph, alpha: &[usize]) -> Result<std::result::Result<Orientation, OverloadWitness>> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if alpha.len() != n {
        return Err(Error::HostMismatch { cert: alpha.len(), graph: n });
    }
    // nodes: source, edges, vertices, sink
    let (s, t) = (0, 1 + m + n);
    let mut net = FlowNetwork::new(m + n + 2);
    let mut to_end = Vec::with_capacity(m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(s, 1 + e, 1);
        let a = net.add_arc(1 + e, 1 + m + u, 1);
        net.add_arc(1 + e, 1 + m + v, 1);
        to_end.push(a);
    }
    for (v, &a) in alpha.iter().enumerate() {
        net.add_arc(1 + m + v, t, a as i64);
    }
    if net.max_flow(s, t) == m as i64 {
        // the endpoint receiving the edge's unit is its tail
        let heads = g.edges().iter().zip(&to_end).map(|(&(u, v), &a)| if net.flow(a) == 1 { v } else { u }).collect();
        return Ok(Ok(Orientation { heads }));
    }
    let reach = net.residual_reachable(s);
    let subset: Vec<usize> = (0..n).filter(|&v| reach[1 + m + v]).collect();
    let induced_edges = g.induced_edge_count(&subset);
    let capacity = subset.iter().map(|&v| alpha[v]).sum();
    debug_assert!(induced_edges > capacity);
    Ok(Err(OverloadWitness { subset, induced_edges, capacity }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pseudoarboricity {
    pub value: usize,
    pub orientation: Orientation,
    pub witness: DensityWitness,
}

/// Minimum maximum out-degree, found by binary search on a uniform bound.
pub fn pseudoarboricity(g: &Graph) -> Pseudoarboricity {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let uniform = |p: usize| orient_bounded(g, &vec![p; n]).expect("total bound");
    if m == 0 {
        return Pseudoarboricity {
            value: 0,
            orientation: Orientation { heads: Vec::new() },
            witness: DensityWitness::new(g, Vec::new(), DensityKind::Pseudoarboricity),
        };
    }
    let (mut lo, mut hi) = (m.div_ceil(n), g.max_degree());
    while lo < hi {
        let mid = (lo + hi) / 2;
        if uniform(mid).is_ok() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let orientation = uniform(lo).expect("feasible at the optimum");
    let subset = match uniform(lo - 1) {
        Err(w) => w.subset,
        Ok(_) => unreachable!("optimum is minimal"),
    };
    Pseudoarboricity { value: lo, orientation, witness: DensityWitness::new(g, subset, DensityKind::Pseudoarboricity) }
}

pub const ARBORICITY_LIMIT: usize = 20;

/// Exact Nash-Williams arboricity by subset enumeration.
pub fn arboricity(g: &Graph) -> Result<(usize, DensityWitness)> {
    let n = g.vertex_count();
    if n > ARBORICITY_LIMIT {
        return Err(Error::SizeGuard { what: "arboricity vertices", size: n, limit: ARBORICITY_LIMIT });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let mut best: (usize, u32) = (0, 0);
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let mut twice = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice += (adj[v] & mask).count_ones() as usize;
        }
        let val = (twice / 2).div_ceil(size - 1);
        // first maximizer in increasing mask order
        if val > best.0 {
            best = (val, mask);
        }
    }
    let subset = (0..n).filter(|&v| best.1 >> v & 1 == 1).collect();
    Ok((best.0, DensityWitness::new(g, subset, DensityKind::Arboricity)))
}

/// Minimum-degree peeling; every vertex has at most `d` neighbours later in
/// the returned order.
pub fn degeneracy(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        d = d.max(deg[v]);
        gone[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !gone[w] {
                deg[w] -= 1;
            }
        }
    }
    (d, order)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalStarArboricity {
    pub value: usize,
    pub pseudoarboricity: usize,
    pub orientation: Orientation,
    pub certificate: CoverCertificate,
}

/// Stars of incoming edges, one per vertex with positive in-degree.
pub fn in_star_cover(g: &Graph, o: &Orientation) -> CoverCertificate {
    let n = g.vertex_count();
    let mut tails = vec![Vec::new(); n];
    for e in 0..g.edge_count() {
        tails[o.heads[e]].push(o.tail(g, e));
    }
    let mut cert = CoverCertificate::new(n);
    for (v, leaves) in tails.into_iter().enumerate() {
        if leaves.is_empty() {
            continue;
        }
        let k = leaves.len();
        let star = Graph::new(k + 1, (1..=k).map(|i| (0, i))).expect("star");
        let mut map = vec![v];
        map.extend(leaves);
        cert.components.push(Component::new(star, map));
    }
    cert
}

/// `p` if some orientation keeps out-degree `p` to vertices of degree `p`
/// and below `p` elsewhere, `p + 1` otherwise.
pub fn local_star_arboricity(g: &Graph) -> LocalStarArboricity {
    let pa = pseudoarboricity(g);
    let p = pa.value;
    let tight: Option<Orientation> = if p == 0 {
        Some(pa.orientation.clone())
    } else {
        let alpha: Vec<usize> = (0..g.vertex_count()).map(|v| if g.degree(v) == p { p } else { p - 1 }).collect();
        orient_bounded(g, &alpha).expect("total bound").ok()
    };
    let (value, orientation) = match tight {
        Some(o) => (p, o),
        None => (p + 1, pa.orientation.clone()),
    };
    let certificate = in_star_cover(g, &orientation);
    LocalStarArboricity { value, pseudoarboricity: p, orientation, certificate }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, cycle, path, petersen, star};

    #[test]
    fn bounded_examples() {
        let c5 = cycle(5).unwrap();
        let o = orient_bounded(&c5, &[1; 5]).unwrap().unwrap();
        assert!(o.is_consistent(&c5));
        assert_eq!(o.max_out_degree(&c5), 1);
        let k4 = complete(4).unwrap();
        let w = orient_bounded(&k4, &[1; 4]).unwrap().unwrap_err();
        assert!(w.induced_edges > w.capacity);
        assert!(orient_bounded(&petersen(), &[2; 10]).unwrap().is_ok());
        assert!(orient_bounded(&k4, &[1; 3]).is_err());
    }

    #[test]
    fn parameters() {
        assert_eq!(pseudoarboricity(&path(6).unwrap()).value, 1);
        let k5 = complete(5).unwrap();
        let pa = pseudoarboricity(&k5);
        assert_eq!(pa.value, 2);
        assert_eq!(pa.witness.bound(), 2);
        assert_eq!(pseudoarboricity(&petersen()).value, 2);
        assert_eq!(arboricity(&path(5).unwrap()).unwrap().0, 1);
        assert_eq!(arboricity(&complete(4).unwrap()).unwrap().0, 2);
        let (a, w) = arboricity(&k5).unwrap();
        assert_eq!((a, w.bound()), (3, 3));
        assert!(w.check(&k5));
        assert_eq!(degeneracy(&path(4).unwrap()).0, 1);
        assert_eq!(degeneracy(&petersen()).0, 3);
    }

    #[test]
    fn local_star() {
        assert_eq!(local_star_arboricity(&star(5).unwrap()).value, 1);
        assert_eq!(local_star_arboricity(&petersen()).value, 3);
        assert_eq!(local_star_arboricity(&complete_bipartite(2, 3).unwrap()).value, 2);
        assert_eq!(local_star_arboricity(&Graph::empty(3)).value, 0);
    }

    #[test]
    fn text_round_trip() {
        let g = petersen();
        let o = pseudoarboricity(&g).orientation;
        assert_eq!(Orientation::from_text(&g, &o.to_text(&g)).unwrap(), o);
        assert!(Orientation::from_text(&g, "a 0 2\n").is_err());
    }
}
