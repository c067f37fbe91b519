//! Simple undirected graphs on dense vertex ids `0..n`, the named families used
//! throughout the crate, and the derived graphs (line graph, blowup) that carry
//! provenance maps back to their source.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A simple undirected graph. Immutable once built.
///
/// Edges are stored normalized (`u < v`) and sorted, so two graphs with the
/// same edge set compare equal regardless of insertion order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { n, edges: list, adj, labels: vec![None; n] })
    }

    /// Builds a graph from edges, silently dropping loops and duplicates.
    pub(crate) fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut list: Vec<_> = edges.into_iter().filter(|&(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
        list.sort_unstable();
        list.dedup();
        Graph::new(n, list).expect("normalized edge list")
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, []).expect("empty graph")
    }

    /// Returns a copy with vertex `v` labeled.
    pub fn with_label(mut self, v: usize, label: impl Into<String>) -> Result<Self> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        self.labels[v] = Some(label.into());
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(v).and_then(|l| l.as_deref())
    }

    /// Vertices carrying the given label, in increasing order.
    pub fn labeled(&self, label: &str) -> Vec<usize> {
        (0..self.n).filter(|&v| self.label(v) == Some(label)).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_acyclic(&self) -> bool {
        self.components().len() + self.edge_count() == self.n
    }

    /// Two-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Number of edges with both endpoints in `subset`.
    pub fn induced_edge_count(&self, subset: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in subset {
            inside[v] = true;
        }
        self.edges.iter().filter(|&&(u, v)| inside[u] && inside[v]).count()
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        let mut g = Graph::new(vertices.len(), edges).expect("induced subgraph");
        for (i, &v) in vertices.iter().enumerate() {
            g.labels[i] = self.labels[v].clone();
        }
        g
    }

    /// Spanning subgraph keeping only the edges for which `keep` holds.
    pub fn edge_subgraph(&self, mut keep: impl FnMut(usize, usize) -> bool) -> Graph {
        let edges: Vec<_> = self.edges.iter().copied().filter(|&(u, v)| keep(u, v)).collect();
        let mut g = Graph::new(self.n, edges).expect("edge subgraph");
        g.labels = self.labels.clone();
        g
    }

    /// Graph obtained by identifying `b` into `a` (parallel edges and the
    /// resulting loop are discarded). Vertex `b` stays as an isolated vertex.
    pub fn merge_vertices(&self, a: usize, b: usize) -> Graph {
        let map = |x: usize| if x == b { a } else { x };
        Graph::from_edges_lossy(self.n, self.edges.iter().map(|&(u, v)| (map(u), map(v))))
    }

    /// Serializes to the line-based text format.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "n {}", self.n).unwrap();
        for (v, l) in self.labels.iter().enumerate() {
            if let Some(l) = l {
                writeln!(s, "label {v} {l}").unwrap();
            }
        }
        for &(u, v) in &self.edges {
            writeln!(s, "e {u} {v}").unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut edges = Vec::new();
        let mut labels = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match key {
                "n" => {
                    if n.is_some() {
                        return Err(err("repeated `n` line"));
                    }
                    n = Some(rest.trim().parse().map_err(|_| err("bad vertex count"))?);
                }
                "e" => {
                    let nums = parse_usizes(rest).ok_or_else(|| err("bad edge"))?;
                    if nums.len() != 2 {
                        return Err(err("edge needs two endpoints"));
                    }
                    edges.push((nums[0], nums[1]));
                }
                "label" => {
                    let (v, l) = rest.trim().split_once(char::is_whitespace).ok_or_else(|| err("bad label"))?;
                    let v: usize = v.parse().map_err(|_| err("bad label vertex"))?;
                    labels.push((v, l.trim().to_string()));
                }
                _ => return Err(err("unknown directive")),
            }
        }
        let n = n.ok_or(Error::Parse { line: 0, msg: "missing `n` line".into() })?;
        let mut g = Graph::new(n, edges)?;
        for (v, l) in labels {
            g = g.with_label(v, l)?;
        }
        Ok(g)
    }
}

pub(crate) fn parse_usizes(s: &str) -> Option<Vec<usize>> {
    s.split_whitespace().map(|t| t.parse().ok()).collect()
}

/// A walk `v0 v1 .. vm` in some reference graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk(pub Vec<usize>);

impl Walk {
    pub fn edge_len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_closed(&self) -> bool {
        self.0.len() > 1 && self.0.first() == self.0.last()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        for w in self.0.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(Error::InvalidWalk(w[0], w[1]));
            }
        }
        if let Some(&v) = self.0.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// families

/// Path `0 - 1 - .. - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("path", "needs at least one vertex"));
    }
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle `0 - 1 - .. - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(bad("cycle", "length must be at least 3"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(bad("complete", "needs at least one vertex"));
    }
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{m,n}` with class A = `0..m` and class B = `m..m+n`, labeled `A`/`B`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(bad("complete_bipartite", "both classes must be non-empty"));
    }
    let mut g = Graph::new(m + n, (0..m).flat_map(|a| (m..m + n).map(move |b| (a, b))))?;
    for v in 0..m + n {
        g.labels[v] = Some(if v < m { "A" } else { "B" }.to_string());
    }
    Ok(g)
}

/// Star `K_{1,k}`: center `0` (class A), leaves `1..=k` (class B).
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(bad("star", "needs at least one leaf"));
    }
    complete_bipartite(1, k)
}

/// Petersen graph: outer cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::new(10, edges).expect("petersen")
}

/// Spider with `legs` legs of `leg_len` edges each. Center `0`; leg `i` is
/// `0 - (1 + i*leg_len) - .. - (i*leg_len + leg_len)`.
pub fn spider(legs: usize, leg_len: usize) -> Result<Graph> {
    if legs == 0 || leg_len == 0 {
        return Err(bad("spider", "needs at least one leg of positive length"));
    }
    let mut edges = Vec::new();
    for i in 0..legs {
        let mut prev = 0;
        for t in 0..leg_len {
            let v = 1 + i * leg_len + t;
            edges.push((prev, v));
            prev = v;
        }
    }
    Graph::new(1 + legs * leg_len, edges)
}

fn bad(family: &str, reason: &str) -> Error {
    Error::InvalidParams { family: family.into(), reason: reason.into() }
}

/// Named-family dispatch used by the CLI and the Python bindings.
pub fn generate(family: &str, params: &[usize]) -> Result<Graph> {
    let want = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(bad(family, &format!("expected {k} parameter(s), got {}", params.len())))
        }
    };
    match family {
        "path" => want(1).and_then(|_| path(params[0])),
        "cycle" => want(1).and_then(|_| cycle(params[0])),
        "complete" => want(1).and_then(|_| complete(params[0])),
        "complete_bipartite" => want(2).and_then(|_| complete_bipartite(params[0], params[1])),
        "star" => want(1).and_then(|_| star(params[0])),
        "petersen" => want(0).map(|_| petersen()),
        "spider" => want(2).and_then(|_| spider(params[0], params[1])),
        _ => Err(Error::UnknownFamily(family.to_string())),
    }
}

// ---------------------------------------------------------------------------
// derived graphs

/// Line graph of `h`. Vertex `i` of the result is edge `h.edges()[i]`, which is
/// also returned as the back-map.
pub fn line_graph(h: &Graph) -> (Graph, Vec<(usize, usize)>) {
    let m = h.edge_count();
    let mut edges = Vec::new();
    for v in 0..h.vertex_count() {
        let inc: Vec<usize> = h.neighbors(v).iter().map(|&w| h.edge_index(v, w).unwrap()).collect();
        for (i, &a) in inc.iter().enumerate() {
            for &b in &inc[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    // two edges of a simple graph share at most one endpoint, so no duplicates
    (Graph::new(m, edges).expect("line graph"), h.edges().to_vec())
}

/// Blowup with `copies[v]` copies of every vertex `v`. Copy `a` of `v` is
/// vertex `offsets[v] + a`; the returned projection maps copies back.
#[derive(Debug, Clone)]
pub struct Blowup {
    pub graph: Graph,
    pub projection: Vec<usize>,
    pub offsets: Vec<usize>,
}

impl Blowup {
    pub fn copy(&self, v: usize, a: usize) -> usize {
        self.offsets[v] + a
    }
}

pub fn blowup_with(g: &Graph, copies: &[usize]) -> Blowup {
    let mut offsets = Vec::with_capacity(g.vertex_count());
    let mut projection = Vec::new();
    for (v, &c) in copies.iter().enumerate() {
        offsets.push(projection.len());
        projection.extend(std::iter::repeat_n(v, c));
    }
    let mut edges = Vec::new();
    for &(u, v) in g.edges() {
        for a in 0..copies[u] {
            for b in 0..copies[v] {
                edges.push((offsets[u] + a, offsets[v] + b));
            }
        }
    }
    let graph = Graph::new(projection.len(), edges).expect("blowup");
    Blowup { graph, projection, offsets }
}

/// Uniform `j`-fold blowup `B_j(G)`.
pub fn blowup(g: &Graph, j: usize) -> Result<Blowup> {
    if j == 0 {
        return Err(Error::OutOfRange("blowup factor must be positive".into()));
    }
    Ok(blowup_with(g, &vec![j; g.vertex_count()]))
}

/// Closed Euler tours, one per component with edges, each starting at a
/// minimum-degree vertex of its component (lowest id on ties).
pub fn euler_tours(g: &Graph) -> Result<Vec<Walk>> {
    euler_tours_from(g, &[])
}

/// Like [`euler_tours`], but a component containing one of `preferred` (with
/// positive degree) starts its tour at the first such vertex.
pub fn euler_tours_from(g: &Graph, preferred: &[usize]) -> Result<Vec<Walk>> {
    if let Some(v) = (0..g.vertex_count()).find(|&v| g.degree(v) % 2 == 1) {
        return Err(Error::OddDegree(v));
    }
    let mut used = vec![false; g.edge_count()];
    let mut next = vec![0usize; g.vertex_count()];
    let mut tours = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let start = preferred
            .iter()
            .copied()
            .find(|v| comp.binary_search(v).is_ok() && g.degree(*v) > 0)
            .unwrap_or_else(|| *comp.iter().min_by_key(|&&v| (g.degree(v), v)).unwrap());
        // Hierholzer, iterative
        let mut stack = vec![start];
        let mut tour = Vec::new();
        while let Some(&u) = stack.last() {
            let nbrs = g.neighbors(u);
            while next[u] < nbrs.len() && used[g.edge_index(u, nbrs[next[u]]).unwrap()] {
                next[u] += 1;
            }
            if next[u] == nbrs.len() {
                tour.push(stack.pop().unwrap());
            } else {
                let w = nbrs[next[u]];
                used[g.edge_index(u, w).unwrap()] = true;
                stack.push(w);
            }
        }
        tour.reverse();
        tours.push(Walk(tour));
    }
    Ok(tours)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        let p = petersen();
        assert_eq!((p.vertex_count(), p.edge_count()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        let k = complete_bipartite(3, 3).unwrap();
        assert_eq!((k.vertex_count(), k.edge_count()), (6, 9));
        assert_eq!(k.labeled("A"), vec![0, 1, 2]);
        let p5 = path(5).unwrap();
        assert_eq!((p5.vertex_count(), p5.edge_count(), p5.max_degree()), (5, 4, 2));
        assert_eq!(spider(3, 2).unwrap().edge_count(), 6);
    }

    #[test]
    fn family_errors() {
        assert!(matches!(generate("cycle", &[2]), Err(Error::InvalidParams { .. })));
        assert!(matches!(generate("moebius", &[]), Err(Error::UnknownFamily(_))));
        assert!(generate("petersen", &[1]).is_err());
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(Graph::new(2, [(0, 2)]).is_err());
    }

    #[test]
    fn line_graphs() {
        let (l, back) = line_graph(&path(4).unwrap());
        assert_eq!(l, path(3).unwrap());
        assert_eq!(back, vec![(0, 1), (1, 2), (2, 3)]);
        let (l, _) = line_graph(&star(3).unwrap());
        assert_eq!(l, complete(3).unwrap());
        let (l, _) = line_graph(&complete(4).unwrap());
        assert_eq!(l.vertex_count(), 6);
        assert_eq!(l.edge_count(), 12);
        assert!((0..6).all(|v| l.degree(v) == 4));
    }

    #[test]
    fn blowups() {
        let e = path(2).unwrap();
        assert_eq!(blowup(&e, 1).unwrap().graph, e.clone().edge_subgraph(|_, _| true));
        let b = blowup(&e, 2).unwrap();
        assert_eq!((b.graph.vertex_count(), b.graph.edge_count()), (4, 4));
        let t = blowup(&complete(3).unwrap(), 2).unwrap();
        assert_eq!((t.graph.vertex_count(), t.graph.edge_count()), (6, 12));
        assert!(blowup(&e, 0).is_err());
    }

    #[test]
    fn euler() {
        let t = euler_tours(&cycle(5).unwrap()).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(t[0].edge_len(), 5);
        assert!(t[0].is_closed());
        let t = euler_tours(&complete(5).unwrap()).unwrap();
        assert_eq!(t[0].edge_len(), 10);
        assert_eq!(euler_tours(&path(3).unwrap()), Err(Error::OddDegree(0)));
    }

    #[test]
    fn text_round_trip() {
        let g = complete_bipartite(2, 2).unwrap();
        let s = g.to_text();
        assert_eq!(Graph::from_text(&s).unwrap(), g);
        assert_eq!(Graph::from_text(&s).unwrap().to_text(), s);
        let parsed = Graph::from_text("# hi\nn 3\ne 2 1\ne 0 1\nlabel 1 two words\n").unwrap();
        assert_eq!(parsed.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(parsed.label(1), Some("two words"));
        assert!(Graph::from_text("e 0 1\n").is_err());
        assert!(Graph::from_text("n 2\nx\n").is_err());
    }
}
