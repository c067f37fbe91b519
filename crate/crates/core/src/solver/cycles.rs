//! Injective cycle-collection covers. A template is a set of vertex-disjoint
//! cycles of the host, so the search picks host cycles directly instead of
//! single edges.

use crate::cover::{Component, CoverCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::Meter;

const CYCLE_LIMIT: usize = 200_000;

/// A simple cycle of the host: vertices in cyclic order plus masks.
#[derive(Debug, Clone)]
pub(crate) struct HostCycle {
    pub(crate) vertices: Vec<usize>,
    pub(crate) vmask: u128,
    pub(crate) emask: u128,
}

/// Edges lying on no cycle.
pub(crate) fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    // an edge is a bridge iff removing it disconnects its endpoints
    g.edges()
        .iter()
        .copied()
        .filter(|&(a, b)| {
            let n = g.vertex_count();
            let mut seen = vec![false; n];
            seen[a] = true;
            let mut stack = vec![a];
            while let Some(x) = stack.pop() {
                for &y in g.neighbors(x) {
                    if (x, y) == (a, b) || seen[y] {
                        continue;
                    }
                    seen[y] = true;
                    stack.push(y);
                }
            }
            !seen[b]
        })
        .collect()
}

/// Every simple cycle, each listed once, starting at its smallest vertex.
pub(crate) fn simple_cycles(g: &Graph) -> Result<Vec<HostCycle>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for s in 0..n {
        let mut path = vec![s];
        let mut on = vec![false; n];
        on[s] = true;
        grow(g, s, &mut path, &mut on, &mut out)?;
    }
    Ok(out)
}

fn grow(g: &Graph, s: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<HostCycle>) -> Result<()> {
    let last = *path.last().unwrap();
    for &w in g.neighbors(last) {
        if w == s && path.len() >= 3 && path[1] < last {
            if out.len() >= CYCLE_LIMIT {
                return Err(Error::SizeGuard { what: "simple cycles", size: out.len(), limit: CYCLE_LIMIT });
            }
            let mut vmask = 0u128;
            let mut emask = 0u128;
            for (i, &a) in path.iter().enumerate() {
                let b = path[(i + 1) % path.len()];
                vmask |= 1 << a;
                emask |= 1 << g.edge_index(a, b).unwrap();
            }
            out.push(HostCycle { vertices: path.clone(), vmask, emask });
        } else if w > s && !on[w] {
            on[w] = true;
            path.push(w);
            grow(g, s, path, on, out)?;
            path.pop();
            on[w] = false;
        }
    }
    Ok(())
}

fn through_edge(g: &Graph, cycles: &[HostCycle]) -> Vec<Vec<usize>> {
    let mut by_edge = vec![Vec::new(); g.edge_count()];
    for (i, c) in cycles.iter().enumerate() {
        for (e, list) in by_edge.iter_mut().enumerate() {
            if c.emask >> e & 1 == 1 {
                list.push(i);
            }
        }
    }
    by_edge
}

fn cycle_edges(c: &HostCycle) -> Vec<(usize, usize)> {
    let k = c.vertices.len();
    (0..k).map(|i| (c.vertices[i], c.vertices[(i + 1) % k])).collect()
}

fn certificate(g: &Graph, cycles: &[HostCycle], bags: &[Vec<usize>]) -> CoverCertificate {
    let mut cert = CoverCertificate::new(g.vertex_count());
    for bag in bags {
        let mut verts: Vec<usize> = bag.iter().flat_map(|&c| cycles[c].vertices.clone()).collect();
        verts.sort_unstable();
        let edges: Vec<_> = bag.iter().flat_map(|&c| cycle_edges(&cycles[c])).collect();
        cert.components.push(Component::from_host_edges(&verts, &edges));
    }
    cert
}

fn full_mask(m: usize) -> u128 {
    if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    }
}

/// At most `k` templates, each a set of vertex-disjoint cycles.
pub(crate) fn cover_global(g: &Graph, k: usize, meter: &mut Meter) -> Result<Option<CoverCertificate>> {
    if (0..g.vertex_count()).any(|v| 2 * k < g.degree(v)) {
        return Ok(None);
    }
    let cycles = simple_cycles(g)?;
    let by_edge = through_edge(g, &cycles);
    let mut bags: Vec<(u128, Vec<usize>)> = Vec::new();
    let found = global_rec(g, &cycles, &by_edge, k, 0, &mut bags, meter);
    Ok(found.map(|b| certificate(g, &cycles, &b)))
}

fn global_rec(
    g: &Graph,
    cycles: &[HostCycle],
    by_edge: &[Vec<usize>],
    k: usize,
    covered: u128,
    bags: &mut Vec<(u128, Vec<usize>)>,
    meter: &mut Meter,
) -> Option<Vec<Vec<usize>>> {
    if !meter.tick() {
        return None;
    }
    let todo = full_mask(g.edge_count()) & !covered;
    if todo == 0 {
        return Some(bags.iter().map(|b| b.1.clone()).collect());
    }
    let e = todo.trailing_zeros() as usize;
    for &c in &by_edge[e] {
        let cyc = &cycles[c];
        for b in 0..=bags.len() {
            if b == bags.len() {
                if bags.len() == k {
                    break;
                }
                bags.push((cyc.vmask, vec![c]));
            } else if bags[b].0 & cyc.vmask == 0 {
                bags[b].0 |= cyc.vmask;
                bags[b].1.push(c);
            } else {
                continue;
            }
            if let Some(r) = global_rec(g, cycles, by_edge, k, covered | cyc.emask, bags, meter) {
                return Some(r);
            }
            if bags[b].1.len() == 1 {
                bags.pop();
            } else {
                bags[b].0 &= !cyc.vmask;
                bags[b].1.pop();
            }
        }
    }
    None
}

/// Every vertex on at most `j` chosen cycles. Splitting a cycle collection
/// into its cycles keeps every preimage count, so templates are single cycles.
pub(crate) fn cover_local(g: &Graph, j: usize, meter: &mut Meter) -> Result<Option<CoverCertificate>> {
    if (0..g.vertex_count()).any(|v| 2 * j < g.degree(v)) {
        return Ok(None);
    }
    let cycles = simple_cycles(g)?;
    let by_edge = through_edge(g, &cycles);
    let mut count = vec![0usize; g.vertex_count()];
    let mut chosen = Vec::new();
    let found = local_rec(g, &cycles, &by_edge, j, 0, &mut count, &mut chosen, meter);
    Ok(found.map(|c| {
        let bags: Vec<Vec<usize>> = c.into_iter().map(|i| vec![i]).collect();
        certificate(g, &cycles, &bags)
    }))
}

#[allow(clippy::too_many_arguments)]
fn local_rec(
    g: &Graph,
    cycles: &[HostCycle],
    by_edge: &[Vec<usize>],
    j: usize,
    covered: u128,
    count: &mut [usize],
    chosen: &mut Vec<usize>,
    meter: &mut Meter,
) -> Option<Vec<usize>> {
    if !meter.tick() {
        return None;
    }
    let todo = full_mask(g.edge_count()) & !covered;
    if todo == 0 {
        return Some(chosen.clone());
    }
    // each further cycle covers at most two new edges at a vertex
    for (v, &used) in count.iter().enumerate() {
        let open = g.neighbors(v).iter().filter(|&&w| todo >> g.edge_index(v, w).unwrap() & 1 == 1).count();
        if open > 2 * (j - used) {
            return None;
        }
    }
    let e = todo.trailing_zeros() as usize;
    for &c in &by_edge[e] {
        let cyc = &cycles[c];
        if cyc.vertices.iter().any(|&v| count[v] >= j) {
            continue;
        }
        for &v in &cyc.vertices {
            count[v] += 1;
        }
        chosen.push(c);
        if let Some(r) = local_rec(g, cycles, by_edge, j, covered | cyc.emask, count, chosen, meter) {
            return Some(r);
        }
        chosen.pop();
        for &v in &cyc.vertices {
            count[v] -= 1;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen};

    #[test]
    fn cycle_counts() {
        assert_eq!(simple_cycles(&cycle(5).unwrap()).unwrap().len(), 1);
        // K4: four triangles and three 4-cycles
        assert_eq!(simple_cycles(&complete(4).unwrap()).unwrap().len(), 7);
        // Petersen: 12 + 10 + 15 + 20 cycles of lengths 5, 6, 8, 9
        assert_eq!(simple_cycles(&petersen()).unwrap().len(), 57);
    }

    #[test]
    fn bridge_detection() {
        assert_eq!(bridges(&path(3).unwrap()).len(), 2);
        assert!(bridges(&complete(4).unwrap()).is_empty());
    }
}
