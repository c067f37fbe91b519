//! Lower-bound gadgets. Vertex roles are stored as graph labels.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::sequence::ConstructionSequence;

/// Default vertex limit for `t_deg`, whose size explodes with `k`.
pub const T_DEG_VERTEX_LIMIT: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    /// Degeneracy `k`, large track number.
    TDeg,
    /// Treewidth `k`, interval number `k+1`.
    ITw,
    /// Simple treewidth `k`, large track number.
    TStw,
    /// Simple treewidth `k`, folded caterpillar number above `k`.
    Fca,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 4] = [GadgetKind::TDeg, GadgetKind::ITw, GadgetKind::TStw, GadgetKind::Fca];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::TDeg => "t_deg",
            GadgetKind::ITw => "i_tw",
            GadgetKind::TStw => "t_stw",
            GadgetKind::Fca => "fca",
        }
    }

    fn min_k(self) -> usize {
        match self {
            GadgetKind::TDeg | GadgetKind::ITw => 1,
            GadgetKind::TStw => 3,
            GadgetKind::Fca => 2,
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GadgetKind::ALL.into_iter().find(|g| g.name() == s).ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct Gadget {
    pub graph: Graph,
    pub sequence: Option<ConstructionSequence>,
}

pub fn gadget(kind: GadgetKind, k: usize) -> Result<Gadget> {
    gadget_with_limit(kind, k, T_DEG_VERTEX_LIMIT)
}

pub fn gadget_with_limit(kind: GadgetKind, k: usize, limit: usize) -> Result<Gadget> {
    if k < kind.min_k() {
        return Err(Error::InvalidParams {
            family: kind.name().into(),
            reason: format!("k must be at least {}", kind.min_k()),
        });
    }
    match kind {
        GadgetKind::TDeg => t_deg(k, limit),
        GadgetKind::ITw => Ok(i_tw(k)),
        GadgetKind::TStw => t_stw(k),
        GadgetKind::Fca => fca(k),
    }
}

fn binomial(n: usize, r: usize) -> Option<usize> {
    if r > n {
        return Some(0);
    }
    let mut acc: usize = 1;
    for i in 0..r.min(n - r) {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

struct Labeled {
    edges: Vec<(usize, usize)>,
    labels: Vec<&'static str>,
}

impl Labeled {
    fn new() -> Self {
        Labeled { edges: Vec::new(), labels: Vec::new() }
    }

    fn add(&mut self, label: &'static str, count: usize) -> Vec<usize> {
        let start = self.labels.len();
        self.labels.extend(std::iter::repeat_n(label, count));
        (start..start + count).collect()
    }

    fn join(&mut self, a: &[usize], b: &[usize]) {
        for &x in a {
            for &y in b {
                self.edges.push((x, y));
            }
        }
    }

    fn build(self) -> Graph {
        let mut g = Graph::new(self.labels.len(), self.edges).expect("gadget edges are simple");
        for (v, l) in self.labels.into_iter().enumerate() {
            g = g.with_label(v, l).expect("in range");
        }
        g
    }
}

/// `K_{k,n}` plus, for every k-subset `S` of the large side, a
/// `K_{k,(k-1)^2+1}` with `S` as its small side.
fn t_deg(k: usize, limit: usize) -> Result<Gadget> {
    let guard = |size| Error::SizeGuard { what: "t_deg vertex count", size, limit };
    let n = binomial(2 * k - 1, k - 1)
        .and_then(|b| b.checked_mul(k - 1))
        .and_then(|x| x.checked_add(2 * k * (2 * k - 1) + 1))
        .ok_or(guard(usize::MAX))?;
    let extra = (k - 1) * (k - 1) + 1;
    let total = binomial(n, k)
        .and_then(|s| s.checked_mul(extra))
        .and_then(|x| x.checked_add(k + n))
        .ok_or(guard(usize::MAX))?;
    if total > limit {
        return Err(guard(total));
    }
    let mut g = Labeled::new();
    let a = g.add("A", k);
    let b = g.add("B", n);
    g.join(&a, &b);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let s: Vec<usize> = subset.iter().map(|&i| b[i]).collect();
        let bs = g.add("S", extra);
        g.join(&s, &bs);
        // next k-subset in lexicographic order
        let Some(i) = (0..k).rev().find(|&i| subset[i] < n - k + i) else { break };
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(Gadget { graph: g.build(), sequence: None })
}

/// `K_{k,2k^2+1}` with a private pendant at every vertex of the large side.
fn i_tw(k: usize) -> Gadget {
    let n = 2 * k * k + 1;
    let mut g = Labeled::new();
    let a = g.add("A", k);
    let b = g.add("B", n);
    g.join(&a, &b);
    let p = g.add("P", n);
    for (&x, &y) in b.iter().zip(&p) {
        g.edges.push((x, y));
    }
    Gadget { graph: g.build(), sequence: None }
}

/// Nested complete bipartite graphs with an explicit simple width-k
/// sequence. Vertices are numbered in stacking order.
fn t_stw(k: usize) -> Result<Gadget> {
    let pairs = 2 * k * k - 2 * k + 1;
    let m2 = (k - 2) * (k - 2) + 1;
    let mut g = Labeled::new();
    let a = g.add("a", k - 1);
    let mut uv = Vec::new();
    // (u, v, b[j][l], c[j][l])
    type Block = (usize, usize, Vec<Vec<usize>>, Vec<Vec<usize>>);
    let mut blocks: Vec<Block> = Vec::new();
    for _ in 0..pairs {
        let u = g.add("u", 1)[0];
        let v = g.add("v", 1)[0];
        uv.extend([u, v]);
        let mut bs = Vec::new();
        let mut cs = Vec::new();
        for _ in 0..5 {
            bs.push(g.add("b", k - 1));
            cs.push(g.add("c", m2));
        }
        blocks.push((u, v, bs, cs));
    }
    g.join(&a, &uv);
    for (u, v, bs, cs) in &blocks {
        for (bj, cj) in bs.iter().zip(cs) {
            g.join(&[*u, *v], bj);
            g.join(bj, cj);
        }
    }
    let graph = g.build();

    let (u1, v1) = (blocks[0].0, blocks[0].1);
    let mut init = a.clone();
    init.extend([u1, v1]);
    let mut seq = ConstructionSequence::new(k, init);
    seq.set_init_present(|x, y| graph.has_edge(x, y));
    let stack = |seq: &mut ConstructionSequence, z: usize, base: Vec<usize>| {
        let present: Vec<usize> = base.iter().copied().filter(|&q| graph.has_edge(z, q)).collect();
        seq.stack_keeping(z, base, &present);
    };
    let mut prev_v = v1;
    for (i, (u, v, bs, cs)) in blocks.iter().enumerate() {
        if i > 0 {
            stack(&mut seq, *u, [a.clone(), vec![prev_v]].concat());
            stack(&mut seq, *v, [a.clone(), vec![*u]].concat());
        }
        prev_v = *v;
        for j in 0..5 {
            for l in 1..k {
                let mut base = vec![*u, *v];
                if j == 0 {
                    base.extend_from_slice(&a[..k - l - 1]);
                } else {
                    // b^{i,j-1}_{l+1..k-1}
                    base.extend_from_slice(&bs[j - 1][l..]);
                }
                base.extend_from_slice(&bs[j][..l - 1]);
                stack(&mut seq, bs[j][l - 1], base);
            }
            let mut prev = *u;
            for &c in &cs[j] {
                stack(&mut seq, c, [bs[j].clone(), vec![prev]].concat());
                prev = c;
            }
        }
    }
    Ok(Gadget { graph, sequence: Some(seq) })
}

fn fca_size(k: usize) -> usize {
    16 * k * k - 16 * k + 4
}

/// Ids of the `fca` gadget: leaves `l`, then `c_1..c_n`, `s_2..s_n`, `a_2..a_n`.
struct FcaIds {
    k: usize,
    n: usize,
}

impl FcaIds {
    fn c(&self, i: usize) -> usize {
        self.k - 2 + i
    }
    fn s(&self, i: usize) -> usize {
        self.k - 1 + self.n + i - 2
    }
    fn a(&self, i: usize) -> usize {
        self.k - 1 + 2 * self.n - 1 + i - 2
    }
}

/// A path `c_1..c_n` joined to `k-1` common leaves, with a vertex `s_i` on
/// each `c_{i-1} c_i` (also joined to all but one leaf) and a pendant `a_i`
/// at each `s_i`.
fn fca(k: usize) -> Result<Gadget> {
    let n = fca_size(k);
    let id = FcaIds { k, n };
    let mut g = Labeled::new();
    let ls = g.add("l", k - 1);
    g.add("c", n);
    g.add("s", n - 1);
    g.add("a", n - 1);
    g.join(&[id.c(1)], &ls);
    for i in 2..=n {
        g.join(&[id.c(i)], &ls);
        g.edges.push((id.c(i - 1), id.c(i)));
        g.join(&[id.s(i)], &ls[..k - 2]);
        g.join(&[id.s(i)], &[id.c(i - 1), id.c(i)]);
        g.edges.push((id.a(i), id.s(i)));
    }
    let graph = g.build();

    let mut init = ls.clone();
    init.extend([id.c(1), id.c(2)]);
    let mut seq = ConstructionSequence::new(k, init);
    seq.set_init_present(|x, y| graph.has_edge(x, y));
    let stack = |seq: &mut ConstructionSequence, z: usize, base: Vec<usize>| {
        let present: Vec<usize> = base.iter().copied().filter(|&q| graph.has_edge(z, q)).collect();
        seq.stack_keeping(z, base, &present);
    };
    for i in 3..=n {
        stack(&mut seq, id.c(i), [ls.clone(), vec![id.c(i - 1)]].concat());
    }
    for i in 2..=n {
        stack(&mut seq, id.s(i), [ls[..k - 2].to_vec(), vec![id.c(i - 1), id.c(i)]].concat());
    }
    for i in 2..=n {
        stack(&mut seq, id.a(i), [ls[..k - 2].to_vec(), vec![id.c(i - 1), id.s(i)]].concat());
    }
    Ok(Gadget { graph, sequence: Some(seq) })
}

/// The 10-vertex core on `c_i..c_{i+3}`, `s_{i+1..i+3}`, `a_{i+1..i+3}` of
/// the `fca` gadget, labeled `c`, `s`, `a`.
pub fn fca_core(k: usize, i: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidParams { family: "fca".into(), reason: "k must be at least 2".into() });
    }
    let n = fca_size(k);
    if i < 1 || i + 3 > n {
        return Err(Error::OutOfRange(format!("core index {i} not in 1..={}", n - 3)));
    }
    let id = FcaIds { k, n };
    let mut vs: Vec<usize> = (i..i + 4).map(|j| id.c(j)).collect();
    vs.extend((i + 1..i + 4).map(|j| id.s(j)));
    vs.extend((i + 1..i + 4).map(|j| id.a(j)));
    Ok(fca(k)?.graph.induced(&vs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::validate_sequence;
    use crate::graph::spider;

    #[test]
    fn sizes() {
        let g = gadget(GadgetKind::ITw, 1).unwrap().graph;
        // spider numbers each leg consecutively
        let relabeled = g.induced(&[0, 1, 4, 2, 5, 3, 6]);
        assert_eq!(relabeled.edges(), spider(3, 2).unwrap().edges());
        assert_eq!(gadget(GadgetKind::ITw, 2).unwrap().graph.vertex_count(), 20);
        assert_eq!(gadget(GadgetKind::TStw, 3).unwrap().graph.vertex_count(), 288);
        assert_eq!(gadget(GadgetKind::TDeg, 2).unwrap().graph.vertex_count(), 258);
        assert!(matches!(gadget(GadgetKind::TDeg, 3), Err(Error::SizeGuard { .. })));
        assert!(gadget(GadgetKind::TStw, 2).is_err());
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(2, 3), Some(0));
    }

    #[test]
    fn sequences_are_simple_and_exact() {
        for (kind, k) in [(GadgetKind::TStw, 3), (GadgetKind::TStw, 4), (GadgetKind::Fca, 2), (GadgetKind::Fca, 3)] {
            let gd = gadget(kind, k).unwrap();
            let seq = gd.sequence.unwrap();
            let check = validate_sequence(&seq, true);
            assert!(check.is_ok(), "{kind} {k}: {:?}", check.violations);
            assert_eq!(check.realized.edges(), gd.graph.edges(), "{kind} {k}");
            assert_eq!(seq.width, k);
        }
    }

    #[test]
    fn core() {
        let g = fca_core(2, 2).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.labeled("c").len(), 4);
        assert_eq!(g.labeled("s").len(), 3);
        for a in g.labeled("a") {
            assert_eq!(g.degree(a), 1);
        }
        for w in g.labeled("c").windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
        assert!(fca_core(2, 34).is_err());
    }
}
