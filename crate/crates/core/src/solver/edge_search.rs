//! Edge-assignment search. Host edges are taken in a fixed breadth-first
//! order and each one is put into a bag; bags are kept extendable to class
//! members at every node.

use crate::classes::TemplateClass;
use crate::cover::{Component, CoverCertificate};
use crate::graph::{blowup_with, Graph};

use super::extend::{extend, is_hereditary, plausible};
use super::{bfs_edge_order, Meter};

#[derive(Debug, Clone, Copy)]
pub(crate) enum BagMode {
    /// At most this many bags in total.
    Global(usize),
    /// Every vertex in at most this many bags. Bags stay connected; an edge
    /// may glue two vertex-disjoint bags, which leaves all counts unchanged.
    Local(usize),
}

#[derive(Clone)]
struct Bag {
    verts: u128,
    edges: Vec<(usize, usize)>,
}

struct Ctx<'a> {
    g: &'a Graph,
    class: TemplateClass,
    order: Vec<usize>,
    mode: BagMode,
}

/// Number of components of `g` that carry edges.
fn nontrivial_components(g: &Graph) -> usize {
    g.components().iter().filter(|c| c.len() > 1).count()
}

/// Static counting bounds. A minimal cover by forests uses every host edge
/// once, so each template vertex over `v` accounts for a distinct edge at
/// `v`, and a forest with `m` edges has at least `m + 1` vertices.
fn passes_counting(g: &Graph, class: TemplateClass, slots: &[usize]) -> bool {
    if let Some(cap) = class.degree_cap() {
        if (0..g.vertex_count()).any(|v| slots[v] * cap < g.degree(v)) {
            return false;
        }
    }
    if class.is_acyclic() {
        let total: usize = (0..g.vertex_count()).map(|v| slots[v].min(g.degree(v))).sum();
        if total < g.edge_count() + nontrivial_components(g) {
            return false;
        }
    }
    true
}

pub(crate) fn cover_bags(
    g: &Graph,
    class: TemplateClass,
    mode: BagMode,
    meter: &mut Meter,
) -> Option<CoverCertificate> {
    if let BagMode::Local(j) = mode {
        if !passes_counting(g, class, &vec![j; g.vertex_count()]) {
            return None;
        }
    }
    let ctx = Ctx { g, class, order: bfs_edge_order(g), mode };
    let mut bags = Vec::new();
    let mut count = vec![0usize; g.vertex_count()];
    let bags = assign(&ctx, 0, &mut bags, &mut count, meter)?;
    let mut cert = CoverCertificate::new(g.vertex_count());
    for bag in bags {
        let edges = extend(class, g, &bag.edges).expect("bags are kept extendable");
        let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        cert.components.push(Component::from_host_edges(&verts, &edges));
    }
    Some(cert)
}

fn bit(v: usize) -> u128 {
    1u128 << v
}

fn assign(ctx: &Ctx, i: usize, bags: &mut Vec<Bag>, count: &mut [usize], meter: &mut Meter) -> Option<Vec<Bag>> {
    if !meter.tick() {
        return None;
    }
    if i == ctx.order.len() {
        return Some(bags.clone());
    }
    let (u, v) = ctx.g.edges()[ctx.order[i]];
    let (bu, bv) = (bit(u), bit(v));
    match ctx.mode {
        BagMode::Global(k) => {
            for b in 0..bags.len() {
                if let Some(r) = try_extend(ctx, i, bags, b, (u, v), count, meter) {
                    return Some(r);
                }
            }
            if bags.len() < k {
                if let Some(r) = try_new(ctx, i, bags, (u, v), count, meter) {
                    return Some(r);
                }
            }
        }
        BagMode::Local(j) => {
            for b in 0..bags.len() {
                let touches = bags[b].verts & (bu | bv);
                if touches == 0 {
                    continue;
                }
                if touches != bu | bv {
                    let w = if touches == bu { v } else { u };
                    if count[w] >= j {
                        continue;
                    }
                }
                if let Some(r) = try_extend(ctx, i, bags, b, (u, v), count, meter) {
                    return Some(r);
                }
            }
            // glue a bag at u with a disjoint bag at v
            for a in 0..bags.len() {
                if bags[a].verts & (bu | bv) != bu {
                    continue;
                }
                for b in 0..bags.len() {
                    if bags[b].verts & (bu | bv) != bv || bags[a].verts & bags[b].verts != 0 {
                        continue;
                    }
                    let mut merged = bags[a].clone();
                    merged.verts |= bags[b].verts;
                    merged.edges.extend_from_slice(&bags[b].edges);
                    merged.edges.push((u, v));
                    if !plausible(ctx.class, ctx.g, &merged.edges) {
                        continue;
                    }
                    let saved = bags.clone();
                    let (lo, hi) = (a.min(b), a.max(b));
                    bags.remove(hi);
                    bags.remove(lo);
                    bags.push(merged);
                    if let Some(r) = assign(ctx, i + 1, bags, count, meter) {
                        return Some(r);
                    }
                    *bags = saved;
                }
            }
            if count[u] < j && count[v] < j {
                if let Some(r) = try_new(ctx, i, bags, (u, v), count, meter) {
                    return Some(r);
                }
            }
        }
    }
    None
}

fn try_extend(
    ctx: &Ctx,
    i: usize,
    bags: &mut Vec<Bag>,
    b: usize,
    (u, v): (usize, usize),
    count: &mut [usize],
    meter: &mut Meter,
) -> Option<Vec<Bag>> {
    let before = bags[b].verts;
    bags[b].edges.push((u, v));
    if plausible(ctx.class, ctx.g, &bags[b].edges) {
        bags[b].verts |= bit(u) | bit(v);
        let fresh: Vec<usize> = [u, v].into_iter().filter(|&w| before & bit(w) == 0).collect();
        for &w in &fresh {
            count[w] += 1;
        }
        if let Some(r) = assign(ctx, i + 1, bags, count, meter) {
            return Some(r);
        }
        for &w in &fresh {
            count[w] -= 1;
        }
        bags[b].verts = before;
    }
    bags[b].edges.pop();
    None
}

fn try_new(
    ctx: &Ctx,
    i: usize,
    bags: &mut Vec<Bag>,
    (u, v): (usize, usize),
    count: &mut [usize],
    meter: &mut Meter,
) -> Option<Vec<Bag>> {
    let edges = vec![(u, v)];
    if !plausible(ctx.class, ctx.g, &edges) {
        return None;
    }
    bags.push(Bag { verts: bit(u) | bit(v), edges });
    count[u] += 1;
    count[v] += 1;
    let r = assign(ctx, i + 1, bags, count, meter);
    count[u] -= 1;
    count[v] -= 1;
    bags.pop();
    r
}

/// Folded search: one template inside the heterogeneous blowup with
/// `bounds[v]` copies of `v`. Every host edge picks one copy-edge; copies of
/// a vertex are interchangeable, so a vertex may only open its next unused
/// copy. Classes that are not closed under subgraphs get completed by
/// further copy-edges at the leaves.
pub(crate) fn cover_folded(
    g: &Graph,
    class: TemplateClass,
    bounds: &[usize],
    meter: &mut Meter,
) -> Option<CoverCertificate> {
    if !passes_counting(g, class, bounds) {
        return None;
    }
    let blow = blowup_with(g, bounds);
    let order = bfs_edge_order(g);
    let mut used = vec![0usize; g.vertex_count()];
    let mut chosen = Vec::with_capacity(order.len());
    let found = folded_rec(g, class, bounds, &blow, &order, 0, &mut used, &mut chosen, meter)?;
    let mut verts: Vec<usize> = found.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let mut comp = Component::from_host_edges(&verts, &found);
    for x in &mut comp.map {
        *x = blow.projection[*x];
    }
    let mut cert = CoverCertificate::new(g.vertex_count());
    if !found.is_empty() {
        cert.components.push(comp);
    }
    Some(cert)
}

#[allow(clippy::too_many_arguments)]
fn folded_rec(
    g: &Graph,
    class: TemplateClass,
    bounds: &[usize],
    blow: &crate::graph::Blowup,
    order: &[usize],
    i: usize,
    used: &mut [usize],
    chosen: &mut Vec<(usize, usize)>,
    meter: &mut Meter,
) -> Option<Vec<(usize, usize)>> {
    if !meter.tick() {
        return None;
    }
    if i == order.len() {
        return if is_hereditary(class) { Some(chosen.clone()) } else { extend(class, &blow.graph, chosen) };
    }
    let (u, v) = g.edges()[order[i]];
    for a in 0..(used[u] + 1).min(bounds[u]) {
        for b in 0..(used[v] + 1).min(bounds[v]) {
            let (x, y) = (blow.copy(u, a), blow.copy(v, b));
            chosen.push((x.min(y), x.max(y)));
            if plausible(class, &blow.graph, chosen) {
                let (su, sv) = (used[u], used[v]);
                used[u] = used[u].max(a + 1);
                used[v] = used[v].max(b + 1);
                if let Some(r) = folded_rec(g, class, bounds, blow, order, i + 1, used, chosen, meter) {
                    return Some(r);
                }
                used[u] = su;
                used[v] = sv;
            }
            chosen.pop();
            if meter.exhausted {
                return None;
            }
        }
    }
    None
}
