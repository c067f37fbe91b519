//! Local star-forest covers by center sets. A minimal cover uses each edge
//! once and one star per center, so it is an orientation from centers to
//! leaves in which `v` lies in `indeg(v) + [v is a center]` stars. The search
//! runs over candidate center sets and orients the edges among them by
//! augmenting paths.

use std::collections::VecDeque;

use crate::cover::{Component, CoverCertificate};
use crate::graph::Graph;

use super::Meter;

/// Largest host handled here; bigger hosts go to the generic search.
pub(crate) const MAX_VERTICES: usize = 20;

pub(crate) fn cover_local(g: &Graph, j: usize, meter: &mut Meter) -> Option<CoverCertificate> {
    let n = g.vertex_count();
    debug_assert!(n <= MAX_VERTICES);
    // vertices of degree above j must be centers
    let forced: u32 = (0..n).filter(|&v| g.degree(v) > j).fold(0, |m, v| m | 1 << v);
    let free: Vec<usize> = (0..n).filter(|&v| forced >> v & 1 == 0 && g.degree(v) > 0).collect();
    for pick in 0u32..1 << free.len() {
        if !meter.tick() {
            return None;
        }
        let centers =
            free.iter().enumerate().filter(|&(i, _)| pick >> i & 1 == 1).fold(forced, |m, (_, &v)| m | 1 << v);
        if let Some(heads) = orient(g, centers, j) {
            return Some(certificate(g, &heads));
        }
    }
    None
}

/// Head of every edge, or `None`. Leaves take all their edges (at most `j`),
/// centers take at most `j - 1` edges from other centers.
fn orient(g: &Graph, centers: u32, j: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let is_center = |v: usize| centers >> v & 1 == 1;
    let mut heads = vec![usize::MAX; g.edge_count()];
    let mut indeg = vec![0usize; n];
    let mut inner = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match (is_center(u), is_center(v)) {
            (false, false) => return None,
            (true, false) => heads[e] = v,
            (false, true) => heads[e] = u,
            (true, true) => inner.push(e),
        }
    }
    for &h in &heads {
        if h != usize::MAX {
            indeg[h] += 1;
            if indeg[h] > j {
                return None;
            }
        }
    }
    if j == 0 && !inner.is_empty() {
        return None;
    }
    let cap = j.saturating_sub(1);
    let mut into: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &e in &inner {
        let (u, v) = g.edges()[e];
        // breadth-first over edges that could turn around
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([u, v]);
        seen[u] = true;
        seen[v] = true;
        let mut end = None;
        while let Some(x) = queue.pop_front() {
            if indeg[x] < cap {
                end = Some(x);
                break;
            }
            for &f in &into[x] {
                let (a, b) = g.edges()[f];
                let y = if a == x { b } else { a };
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, f));
                    queue.push_back(y);
                }
            }
        }
        let mut x = end?;
        while let Some((p, f)) = prev[x] {
            // f pointed into p; turn it into x
            into[p].retain(|&h| h != f);
            into[x].push(f);
            heads[f] = x;
            indeg[x] += 1;
            indeg[p] -= 1;
            x = p;
        }
        heads[e] = x;
        into[x].push(e);
        indeg[x] += 1;
    }
    Some(heads)
}

fn certificate(g: &Graph, heads: &[usize]) -> CoverCertificate {
    let n = g.vertex_count();
    let mut leaves: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (c, l) = if heads[e] == v { (u, v) } else { (v, u) };
        leaves[c].push(l);
    }
    let mut cert = CoverCertificate::new(n);
    for (c, ls) in leaves.iter().enumerate() {
        if ls.is_empty() {
            continue;
        }
        let mut verts = vec![c];
        verts.extend(ls);
        let edges: Vec<(usize, usize)> = ls.iter().map(|&l| (c.min(l), c.max(l))).collect();
        cert.components.push(Component::from_host_edges(&verts, &edges));
    }
    cert
}
