//! Packing numbers: edge-disjoint templates, maximizing either their number
//! (global) or the least number of template vertices over a host vertex
//! (local, folded). Templates must have edges and no isolated vertices;
//! otherwise the local and folded values would be unbounded.
//!
//! Every class except cycle collections contains a single edge, and then the
//! optimum is attained by single-edge templates: a template through `v` uses
//! an edge at `v`, so no packing beats `|E|` templates or `deg(v)` preimages.
//! Cycle collections are searched over host cycles and even subgraphs.

use crate::classes::TemplateClass;
use crate::cover::{Component, CoverCertificate, Mode};
use crate::error::{Error, Result};
use crate::graph::{cycle as cycle_graph, euler_tours, Graph};

use super::cycles::{simple_cycles, HostCycle};
use super::{guard, Budget, Meter, SolveResult, Status};

const CYCLE_SPACE_LIMIT: usize = 24;

pub fn compute_packing(g: &Graph, class: TemplateClass, mode: Mode, budget: Budget) -> Result<SolveResult> {
    guard(g)?;
    let mut meter = Meter::new(budget);
    let (value, cert) = if class.contains_edge() {
        single_edges(g, mode)
    } else {
        match mode {
            Mode::Global => cycles_global(g, &mut meter)?,
            Mode::Local => cycles_local(g, &mut meter)?,
            Mode::Folded => cycles_folded(g)?,
        }
    };
    if meter.exhausted {
        return Ok(SolveResult {
            status: Status::Unknown,
            value: None,
            certificate: None,
            nodes_explored: meter.nodes,
            time_limit_hit: true,
        });
    }
    Ok(SolveResult {
        status: Status::Feasible,
        value: Some(value),
        certificate: Some(cert),
        nodes_explored: meter.nodes,
        time_limit_hit: false,
    })
}

fn min_degree(g: &Graph) -> usize {
    (0..g.vertex_count()).map(|v| g.degree(v)).min().unwrap_or(0)
}

fn edge_component(u: usize, v: usize) -> Component {
    Component::new(Graph::new(2, [(0, 1)]).unwrap(), vec![u, v])
}

fn single_edges(g: &Graph, mode: Mode) -> (usize, CoverCertificate) {
    let mut cert = CoverCertificate::new(g.vertex_count());
    match mode {
        Mode::Global | Mode::Local => {
            cert.components = g.edges().iter().map(|&(u, v)| edge_component(u, v)).collect();
        }
        Mode::Folded if g.edge_count() > 0 => {
            // one template: a perfect matching on 2|E| vertices
            let m = g.edge_count();
            let t = Graph::new(2 * m, (0..m).map(|i| (2 * i, 2 * i + 1))).unwrap();
            let map = g.edges().iter().flat_map(|&(u, v)| [u, v]).collect();
            cert.components.push(Component::new(t, map));
        }
        Mode::Folded => {}
    }
    let value = if mode == Mode::Global { g.edge_count() } else { min_degree(g) };
    (value, cert)
}

fn cycle_component(c: &HostCycle) -> Component {
    let k = c.vertices.len();
    Component::new(cycle_graph(k).unwrap(), c.vertices.clone())
}

fn cycles_global(g: &Graph, meter: &mut Meter) -> Result<(usize, CoverCertificate)> {
    let cycles = simple_cycles(g)?;
    let mut best = Vec::new();
    let mut cur = Vec::new();
    max_disjoint(&cycles, 0, 0, g.edge_count(), &mut cur, &mut best, meter);
    let mut cert = CoverCertificate::new(g.vertex_count());
    cert.components = best.iter().map(|&i| cycle_component(&cycles[i])).collect();
    Ok((best.len(), cert))
}

fn max_disjoint(
    cycles: &[HostCycle],
    from: usize,
    used: u128,
    m: usize,
    cur: &mut Vec<usize>,
    best: &mut Vec<usize>,
    meter: &mut Meter,
) {
    if !meter.tick() {
        return;
    }
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    let free = m - used.count_ones() as usize;
    if cur.len() + free / 3 <= best.len() {
        return;
    }
    for i in from..cycles.len() {
        if cycles[i].emask & used == 0 {
            cur.push(i);
            max_disjoint(cycles, i + 1, used | cycles[i].emask, m, cur, best, meter);
            cur.pop();
        }
    }
}

fn cycles_local(g: &Graph, meter: &mut Meter) -> Result<(usize, CoverCertificate)> {
    let cycles = simple_cycles(g)?;
    let n = g.vertex_count();
    for t in (1..=min_degree(g) / 2).rev() {
        let mut count = vec![0usize; n];
        let mut chosen = Vec::new();
        if reach_target(&cycles, t, 0, &mut count, &mut chosen, meter) {
            let mut cert = CoverCertificate::new(n);
            cert.components = chosen.iter().map(|&i| cycle_component(&cycles[i])).collect();
            return Ok((t, cert));
        }
        if meter.exhausted {
            break;
        }
    }
    Ok((0, CoverCertificate::new(n)))
}

/// Edge-disjoint cycles putting every vertex on at least `t` of them.
fn reach_target(
    cycles: &[HostCycle],
    t: usize,
    used: u128,
    count: &mut [usize],
    chosen: &mut Vec<usize>,
    meter: &mut Meter,
) -> bool {
    if !meter.tick() {
        return false;
    }
    let Some(v) = (0..count.len()).find(|&v| count[v] < t) else {
        return true;
    };
    for (i, c) in cycles.iter().enumerate() {
        if c.vmask >> v & 1 == 0 || c.emask & used != 0 {
            continue;
        }
        for &w in &c.vertices {
            count[w] += 1;
        }
        chosen.push(i);
        if reach_target(cycles, t, used | c.emask, count, chosen, meter) {
            return true;
        }
        chosen.pop();
        for &w in &c.vertices {
            count[w] -= 1;
        }
    }
    false
}

/// Folded cycle packings are even subgraphs split into closed trails; a
/// vertex of degree `2d` in the subgraph gets `d` template vertices.
fn cycles_folded(g: &Graph) -> Result<(usize, CoverCertificate)> {
    let n = g.vertex_count();
    let basis = cycle_basis(g);
    if basis.len() > CYCLE_SPACE_LIMIT {
        return Err(Error::SizeGuard { what: "cycle space dimension", size: basis.len(), limit: CYCLE_SPACE_LIMIT });
    }
    let mut best = (0usize, 0u128);
    for bits in 1u64..(1u64 << basis.len()) {
        let mut mask = 0u128;
        for (i, b) in basis.iter().enumerate() {
            if bits >> i & 1 == 1 {
                mask ^= b;
            }
        }
        let mut deg = vec![0usize; n];
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> e & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        let value = deg.iter().map(|d| d / 2).min().unwrap_or(0);
        if value > best.0 {
            best = (value, mask);
        }
    }
    let mut cert = CoverCertificate::new(n);
    if best.0 > 0 {
        let sub = g.edge_subgraph(|u, v| best.1 >> g.edge_index(u, v).unwrap() & 1 == 1);
        let tours = euler_tours(&sub)?;
        let mut t_edges = Vec::new();
        let mut map = Vec::new();
        for w in tours {
            let len = w.edge_len();
            let base = map.len();
            map.extend_from_slice(&w.0[..len]);
            t_edges.extend((0..len).map(|i| (base + i, base + (i + 1) % len)));
        }
        cert.components.push(Component::new(Graph::new(map.len(), t_edges)?, map));
    }
    Ok((best.0, cert))
}

/// Fundamental cycles of a spanning forest, as edge masks.
fn cycle_basis(g: &Graph) -> Vec<u128> {
    let n = g.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut tree = vec![false; g.edge_count()];
    for s in 0..n {
        if parent[s] != usize::MAX {
            continue;
        }
        parent[s] = s;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    tree[g.edge_index(x, y).unwrap()] = true;
                    stack.push(y);
                }
            }
        }
    }
    let mut basis = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if tree[e] {
            continue;
        }
        let mut mask = 1u128 << e;
        let (mut a, mut b) = (u, v);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            mask ^= 1 << g.edge_index(a, parent[a]).unwrap();
            a = parent[a];
        }
        basis.push(mask);
    }
    basis
}
