//! Template classes, their membership tests and closure properties.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::graph::Graph;

/// The template classes a host graph can be covered with. Every class is
/// closed under disjoint union and admits isolated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TemplateClass {
    LinearForest,
    StarForest,
    CaterpillarForest,
    Interval,
    CliqueCollection,
    CycleCollection,
    Matching,
    Forest,
    Pseudoforest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClosureFlags {
    pub closed_under_subgraphs: bool,
    pub closed_under_disjoint_union: bool,
    pub closed_under_merging_within_components: bool,
}

impl TemplateClass {
    pub const ALL: [TemplateClass; 9] = [
        TemplateClass::LinearForest,
        TemplateClass::StarForest,
        TemplateClass::CaterpillarForest,
        TemplateClass::Interval,
        TemplateClass::CliqueCollection,
        TemplateClass::CycleCollection,
        TemplateClass::Matching,
        TemplateClass::Forest,
        TemplateClass::Pseudoforest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TemplateClass::LinearForest => "linear_forest",
            TemplateClass::StarForest => "star_forest",
            TemplateClass::CaterpillarForest => "caterpillar_forest",
            TemplateClass::Interval => "interval",
            TemplateClass::CliqueCollection => "clique_collection",
            TemplateClass::CycleCollection => "cycle_collection",
            TemplateClass::Matching => "matching",
            TemplateClass::Forest => "forest",
            TemplateClass::Pseudoforest => "pseudoforest",
        }
    }

    pub fn properties(self) -> ClosureFlags {
        use TemplateClass::*;
        ClosureFlags {
            closed_under_subgraphs: !matches!(self, Interval | CliqueCollection | CycleCollection),
            closed_under_disjoint_union: true,
            closed_under_merging_within_components: matches!(self, StarForest | CliqueCollection | Matching),
        }
    }

    /// Whether every member graph is acyclic.
    pub fn is_acyclic(self) -> bool {
        use TemplateClass::*;
        matches!(self, LinearForest | StarForest | CaterpillarForest | Matching | Forest)
    }

    /// Whether a single edge belongs to the class.
    pub fn contains_edge(self) -> bool {
        self != TemplateClass::CycleCollection
    }

    /// Largest degree any member graph may have, if bounded.
    pub fn degree_cap(self) -> Option<usize> {
        match self {
            TemplateClass::LinearForest | TemplateClass::CycleCollection => Some(2),
            TemplateClass::Matching => Some(1),
            _ => None,
        }
    }

    /// A stored pair `(member, non-member)` witnessing each `false` closure
    /// flag: the non-member arises from the member by deleting one edge
    /// (subgraph flag) or by merging two vertices of one component.
    pub fn counterexample(self, flag: ClosureFlag) -> Option<(Graph, Graph)> {
        use TemplateClass::*;
        let g = |n, e: &[(usize, usize)]| Graph::new(n, e.iter().copied()).unwrap();
        match flag {
            ClosureFlag::Subgraphs => match self {
                Interval => {
                    let diamond = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
                    let c4 = diamond.edge_subgraph(|u, v| (u, v) != (0, 2));
                    Some((diamond, c4))
                }
                CliqueCollection | CycleCollection => {
                    let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
                    let p3 = k3.edge_subgraph(|u, v| (u, v) != (0, 2));
                    Some((k3, p3))
                }
                _ => None,
            },
            ClosureFlag::Merging => match self {
                LinearForest | CaterpillarForest | Forest => {
                    let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
                    let merged = p4.merge_vertices(0, 3);
                    Some((p4, merged))
                }
                Interval => {
                    let p5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
                    let merged = p5.merge_vertices(0, 4);
                    Some((p5, merged))
                }
                CycleCollection => {
                    let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
                    let merged = c4.merge_vertices(0, 2);
                    Some((c4, merged))
                }
                Pseudoforest => {
                    let t = g(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]);
                    let merged = t.merge_vertices(0, 4);
                    Some((t, merged))
                }
                _ => None,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureFlag {
    Subgraphs,
    Merging,
}

impl fmt::Display for TemplateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TemplateClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        TemplateClass::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

/// Membership test.
pub fn recognize(class: TemplateClass, g: &Graph) -> bool {
    use TemplateClass::*;
    let n = g.vertex_count();
    match class {
        LinearForest => g.max_degree() <= 2 && g.is_acyclic(),
        StarForest => g.is_acyclic() && g.edges().iter().all(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1),
        CaterpillarForest => {
            g.is_acyclic() && (0..n).all(|v| g.neighbors(v).iter().filter(|&&w| g.degree(w) >= 2).count() <= 2)
        }
        Interval => is_interval(g),
        CliqueCollection => g.components().iter().all(|c| {
            let s = c.len();
            g.induced_edge_count(c) == s * (s - 1) / 2
        }),
        CycleCollection => (0..n).all(|v| matches!(g.degree(v), 0 | 2)),
        Matching => g.max_degree() <= 1,
        Forest => g.is_acyclic(),
        Pseudoforest => g.components().iter().all(|c| g.induced_edge_count(c) <= c.len()),
    }
}

// ---------------------------------------------------------------------------
// interval graphs: chordal and asteroidal-triple-free

/// Perfect elimination ordering test on a maximum-cardinality-search order.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.vertex_count();
    // MCS visits vertices; the reverse visiting order is a PEO iff chordal
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !visited[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        visited[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // in PEO order (reverse of `order`), the later neighbours of v are those
    // visited earlier by MCS
    for &v in &order {
        let earlier: Vec<usize> = g.neighbors(v).iter().copied().filter(|&w| pos[w] < pos[v]).collect();
        if let Some(&parent) = earlier.iter().max_by_key(|&&w| pos[w]) {
            if earlier.iter().any(|&w| w != parent && !g.has_edge(w, parent)) {
                return false;
            }
        }
    }
    true
}

/// Some induced cycle of length at least four, if one exists.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    for v in 0..n {
        let nb = g.neighbors(v);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                // shortest x-y path avoiding N[v] except x and y
                let mut blocked = vec![false; n];
                blocked[v] = true;
                for &w in nb {
                    blocked[w] = w != x && w != y;
                }
                let mut prev = vec![usize::MAX; n];
                prev[x] = x;
                let mut queue = VecDeque::from([x]);
                while let Some(u) = queue.pop_front() {
                    if u == y {
                        break;
                    }
                    for &w in g.neighbors(u) {
                        if !blocked[w] && prev[w] == usize::MAX {
                            prev[w] = u;
                            queue.push_back(w);
                        }
                    }
                }
                if prev[y] != usize::MAX {
                    let mut cyc = vec![v];
                    let mut path = vec![y];
                    let mut c = y;
                    while c != x {
                        c = prev[c];
                        path.push(c);
                    }
                    path.reverse();
                    cyc.extend(path);
                    return Some(cyc);
                }
            }
        }
    }
    None
}

/// For every vertex z, component labels of `G - N[z]` (`usize::MAX` for
/// vertices inside `N[z]`).
fn avoidance_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    (0..n)
        .map(|z| {
            let mut label = vec![usize::MAX; n];
            let mut blocked = vec![false; n];
            blocked[z] = true;
            for &w in g.neighbors(z) {
                blocked[w] = true;
            }
            let mut next = 0;
            for s in 0..n {
                if blocked[s] || label[s] != usize::MAX {
                    continue;
                }
                label[s] = next;
                let mut queue = VecDeque::from([s]);
                while let Some(u) = queue.pop_front() {
                    for &w in g.neighbors(u) {
                        if !blocked[w] && label[w] == usize::MAX {
                            label[w] = next;
                            queue.push_back(w);
                        }
                    }
                }
                next += 1;
            }
            label
        })
        .collect()
}

/// Some asteroidal triple, if one exists.
pub fn find_asteroidal_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    let comp = avoidance_components(g);
    let joined = |x: usize, y: usize, z: usize| {
        let c = &comp[z];
        c[x] != usize::MAX && c[x] == c[y]
    };
    for x in 0..n {
        if g.degree(x) == 0 {
            continue;
        }
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                if joined(x, y, z) && joined(x, z, y) && joined(y, z, x) {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g) && find_asteroidal_triple(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, petersen, spider, star};

    fn union(a: &Graph, b: &Graph) -> Graph {
        let n = a.vertex_count();
        let edges = a.edges().iter().copied().chain(b.edges().iter().map(|&(u, v)| (u + n, v + n)));
        Graph::new(n + b.vertex_count(), edges).unwrap()
    }

    #[test]
    fn spec_examples() {
        let lf = union(&path(4).unwrap(), &path(2).unwrap());
        assert!(recognize(TemplateClass::LinearForest, &lf));
        assert!(!recognize(TemplateClass::Interval, &cycle(4).unwrap()));
        let sp = spider(3, 2).unwrap();
        assert!(!recognize(TemplateClass::CaterpillarForest, &sp));
        assert!(!recognize(TemplateClass::Interval, &sp));
        assert!(find_asteroidal_triple(&sp).is_some());
    }

    #[test]
    fn basic_memberships() {
        use TemplateClass::*;
        let k4 = complete(4).unwrap();
        assert!(recognize(CliqueCollection, &k4));
        assert!(recognize(Interval, &k4));
        assert!(!recognize(Pseudoforest, &k4));
        assert!(recognize(StarForest, &star(5).unwrap()));
        assert!(!recognize(StarForest, &path(4).unwrap()));
        assert!(recognize(CaterpillarForest, &path(6).unwrap()));
        assert!(recognize(CycleCollection, &union(&cycle(3).unwrap(), &cycle(5).unwrap())));
        assert!(!recognize(CycleCollection, &petersen()));
        assert!(recognize(Pseudoforest, &cycle(7).unwrap()));
        assert!(recognize(Matching, &Graph::empty(3)));
        assert!(find_chordless_cycle(&petersen()).is_some());
        assert!(find_chordless_cycle(&k4).is_none());
    }

    #[test]
    fn flag_table_and_counterexamples() {
        use TemplateClass::*;
        assert!(StarForest.properties().closed_under_merging_within_components);
        assert!(!LinearForest.properties().closed_under_merging_within_components);
        assert!(!Interval.properties().closed_under_subgraphs);
        for class in TemplateClass::ALL {
            let p = class.properties();
            assert!(p.closed_under_disjoint_union);
            for (flag, holds) in [
                (ClosureFlag::Subgraphs, p.closed_under_subgraphs),
                (ClosureFlag::Merging, p.closed_under_merging_within_components),
            ] {
                match class.counterexample(flag) {
                    Some((member, broken)) => {
                        assert!(!holds, "{class}: counterexample for a true flag");
                        assert!(recognize(class, &member), "{class}");
                        assert!(!recognize(class, &broken), "{class}");
                    }
                    None => assert!(holds, "{class}: false flag without counterexample"),
                }
            }
        }
    }

    #[test]
    fn names_round_trip() {
        for c in TemplateClass::ALL {
            assert_eq!(c.name().parse::<TemplateClass>().unwrap(), c);
        }
        assert!("chordal".parse::<TemplateClass>().is_err());
    }
}
