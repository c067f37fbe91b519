//! Extendability: given an edge set `F` of a host `G`, find a subgraph `H`
//! with `F ⊆ H ⊆ G` that belongs to the class. For classes closed under
//! subgraphs this is just membership of `F`; interval graphs, clique
//! collections and cycle collections need a search.

use std::collections::HashSet;

use crate::classes::{find_asteroidal_triple, find_chordless_cycle, recognize, TemplateClass};
use crate::graph::Graph;

pub(crate) fn is_hereditary(class: TemplateClass) -> bool {
    class.properties().closed_under_subgraphs
}

/// Edge list of some class member between `f` and `host`, or `None`.
pub(crate) fn extend(class: TemplateClass, host: &Graph, f: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let n = host.vertex_count();
    match class {
        TemplateClass::Interval => extend_interval(host, f),
        TemplateClass::CliqueCollection => extend_cliques(host, f),
        TemplateClass::CycleCollection => extend_cycles(host, f),
        _ => recognize(class, &Graph::from_edges_lossy(n, f.iter().copied())).then(|| f.to_vec()),
    }
}

/// Cheap necessary condition used at inner search nodes.
pub(crate) fn plausible(class: TemplateClass, host: &Graph, f: &[(usize, usize)]) -> bool {
    match class {
        TemplateClass::CycleCollection => {
            let mut deg = vec![0u8; host.vertex_count()];
            f.iter().all(|&(u, v)| {
                deg[u] += 1;
                deg[v] += 1;
                deg[u] <= 2 && deg[v] <= 2
            })
        }
        _ => extend(class, host, f).is_some(),
    }
}

fn extend_cliques(host: &Graph, f: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let g = Graph::from_edges_lossy(host.vertex_count(), f.iter().copied());
    let mut out = Vec::new();
    for comp in g.components() {
        for (i, &a) in comp.iter().enumerate() {
            for &b in &comp[i + 1..] {
                if !host.has_edge(a, b) {
                    return None;
                }
                out.push((a, b));
            }
        }
    }
    Some(out)
}

/// Branches on the edges that could destroy an obstruction (a chordless
/// cycle or an asteroidal triple), staying on the vertices of `F`: an
/// induced subgraph of an interval graph is interval, so extra vertices
/// never help.
fn extend_interval(host: &Graph, f: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let n = host.vertex_count();
    let mut start: Vec<(usize, usize)> = f.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    start.sort_unstable();
    start.dedup();
    let mut failed = HashSet::new();
    interval_rec(host, n, start, &mut failed)
}

fn interval_rec(
    host: &Graph,
    n: usize,
    h: Vec<(usize, usize)>,
    failed: &mut HashSet<Vec<(usize, usize)>>,
) -> Option<Vec<(usize, usize)>> {
    if failed.contains(&h) {
        return None;
    }
    let g = Graph::from_edges_lossy(n, h.iter().copied());
    let in_f: Vec<bool> = (0..n).map(|v| g.degree(v) > 0).collect();
    let candidates: Vec<(usize, usize)> = if let Some(cyc) = find_chordless_cycle(&g) {
        let mut c = Vec::new();
        for (i, &a) in cyc.iter().enumerate() {
            for &b in &cyc[i + 1..] {
                if host.has_edge(a, b) && !g.has_edge(a, b) {
                    c.push((a.min(b), a.max(b)));
                }
            }
        }
        c
    } else if let Some((x, y, z)) = find_asteroidal_triple(&g) {
        let mut c = Vec::new();
        for &a in &[x, y, z] {
            for &b in host.neighbors(a) {
                if in_f[b] && !g.has_edge(a, b) {
                    c.push((a.min(b), a.max(b)));
                }
            }
        }
        c.sort_unstable();
        c.dedup();
        c
    } else {
        return Some(h);
    };
    for e in candidates {
        let mut next = h.clone();
        let pos = next.binary_search(&e).unwrap_err();
        next.insert(pos, e);
        if let Some(found) = interval_rec(host, n, next, failed) {
            return Some(found);
        }
    }
    failed.insert(h);
    None
}

/// Closes every path component of `F` into a cycle through fresh vertices.
fn extend_cycles(host: &Graph, f: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let n = host.vertex_count();
    let g = Graph::from_edges_lossy(n, f.iter().copied());
    if g.max_degree() > 2 {
        return None;
    }
    let mut used: Vec<bool> = (0..n).map(|v| g.degree(v) > 0).collect();
    let mut open = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let ends: Vec<usize> = comp.iter().copied().filter(|&v| g.degree(v) == 1).collect();
        if let [a, b] = ends[..] {
            // a single edge needs a detour of length at least two
            open.push((a, b, comp.len() == 2));
        }
    }
    let mut added = Vec::new();
    if close_paths(host, &mut open, &mut used, &mut added) {
        let mut out: Vec<(usize, usize)> = g.edges().to_vec();
        out.extend(added.into_iter().map(|(u, v)| (u.min(v), u.max(v))));
        out.sort_unstable();
        Some(out)
    } else {
        None
    }
}

/// Closes the open paths one after another. A detour may run into an end of
/// another open path, in which case the two paths are joined and the walk
/// continues from the far end of the second one.
fn close_paths(
    host: &Graph,
    open: &mut Vec<(usize, usize, bool)>,
    used: &mut [bool],
    added: &mut Vec<(usize, usize)>,
) -> bool {
    let Some((a, b, single)) = open.pop() else {
        return true;
    };
    let ok = walk(host, a, b, single, 0, open, used, added);
    open.push((a, b, single));
    ok
}

#[allow(clippy::too_many_arguments)]
fn walk(
    host: &Graph,
    target: usize,
    at: usize,
    single: bool,
    steps: usize,
    open: &mut Vec<(usize, usize, bool)>,
    used: &mut [bool],
    added: &mut Vec<(usize, usize)>,
) -> bool {
    for &w in host.neighbors(at) {
        if w == target {
            if single && steps == 0 {
                continue;
            }
            added.push((at, w));
            if close_paths(host, open, used, added) {
                return true;
            }
            added.pop();
        } else if let Some(i) = open.iter().position(|&(c, d, _)| c == w || d == w) {
            let path = open.remove(i);
            let far = if path.0 == w { path.1 } else { path.0 };
            added.push((at, w));
            if walk(host, target, far, false, 0, open, used, added) {
                return true;
            }
            added.pop();
            open.insert(i, path);
        } else if !used[w] {
            used[w] = true;
            added.push((at, w));
            if walk(host, target, w, single, steps + 1, open, used, added) {
                return true;
            }
            added.pop();
            used[w] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn interval_needs_a_chord() {
        let host = complete(4).unwrap();
        let c4 = [(0, 1), (1, 2), (2, 3), (0, 3)];
        let h = extend(TemplateClass::Interval, &host, &c4).unwrap();
        assert!(h.len() == 5 || h.len() == 6);
        assert!(extend(TemplateClass::Interval, &cycle(4).unwrap(), &c4).is_none());
    }

    #[test]
    fn cliques_and_cycles() {
        let host = complete(4).unwrap();
        assert_eq!(extend(TemplateClass::CliqueCollection, &host, &[(0, 1), (1, 2)]).unwrap().len(), 3);
        assert!(extend(TemplateClass::CliqueCollection, &path(3).unwrap(), &[(0, 1), (1, 2)]).is_none());
        let h = extend(TemplateClass::CycleCollection, &host, &[(0, 1)]).unwrap();
        assert!(h.len() == 3 || h.len() == 4);
        assert!(extend(TemplateClass::CycleCollection, &path(3).unwrap(), &[(0, 1)]).is_none());
        assert_eq!(extend(TemplateClass::CycleCollection, &cycle(5).unwrap(), &[(0, 1), (2, 3)]).unwrap().len(), 5);
    }
}
