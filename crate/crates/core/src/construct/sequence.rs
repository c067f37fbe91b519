//! k-tree construction sequences: an initial (k+1)-clique followed by
//! stackings of new vertices onto k-cliques, each with a mask of the edges
//! that are actually present.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{parse_usizes, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackStep {
    pub vertex: usize,
    pub base: Vec<usize>,
    /// Bit `i` set iff the edge to `base[i]` is present.
    pub keep: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionSequence {
    pub width: usize,
    pub init: Vec<usize>,
    /// Mask over the pairs of `init` in lexicographic position order
    /// `(0,1), (0,2), ..., (k-1,k)`; `None` keeps them all.
    pub init_keep: Option<u64>,
    pub steps: Vec<StackStep>,
}

pub(crate) fn full_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

fn init_pairs(k1: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..k1).flat_map(move |a| (a + 1..k1).map(move |b| (a, b)))
}

impl ConstructionSequence {
    pub fn new(width: usize, init: Vec<usize>) -> Self {
        ConstructionSequence { width, init, init_keep: None, steps: Vec::new() }
    }

    pub fn stack(&mut self, vertex: usize, base: Vec<usize>, keep: u64) {
        self.steps.push(StackStep { vertex, base, keep });
    }

    /// Stacks `vertex` keeping exactly the edges to base vertices in `present`.
    pub fn stack_keeping(&mut self, vertex: usize, base: Vec<usize>, present: &[usize]) {
        let keep = base.iter().enumerate().filter(|(_, b)| present.contains(b)).fold(0, |m, (i, _)| m | 1 << i);
        self.stack(vertex, base, keep);
    }

    pub fn vertex_count(&self) -> usize {
        self.init.len() + self.steps.len()
    }

    /// Present edges of the initial clique.
    pub fn init_edges(&self) -> Vec<(usize, usize)> {
        let keep = self.init_keep.unwrap_or(u64::MAX);
        init_pairs(self.init.len())
            .enumerate()
            .filter(|(i, _)| keep >> i & 1 == 1)
            .map(|(_, (a, b))| (self.init[a], self.init[b]))
            .collect()
    }

    /// Sets `init_keep` from the set of present init edges.
    pub fn set_init_present(&mut self, present: impl Fn(usize, usize) -> bool) {
        let mut keep = 0u64;
        for (i, (a, b)) in init_pairs(self.init.len()).enumerate() {
            if present(self.init[a], self.init[b]) {
                keep |= 1 << i;
            }
        }
        let all = full_mask(self.init.len() * (self.init.len().saturating_sub(1)) / 2);
        self.init_keep = if keep == all { None } else { Some(keep) };
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "width {}", self.width).unwrap();
        let init: Vec<String> = self.init.iter().map(|v| v.to_string()).collect();
        write!(s, "init {}", init.join(" ")).unwrap();
        if let Some(k) = self.init_keep {
            write!(s, " keep {k}").unwrap();
        }
        s.push('\n');
        for st in &self.steps {
            let base: Vec<String> = st.base.iter().map(|v| v.to_string()).collect();
            writeln!(s, "stack {} : {} keep {}", st.vertex, base.join(" "), st.keep).unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut width = None;
        let mut init = None;
        let mut init_keep = None;
        let mut steps = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let (body, keep) = match rest.split_once("keep") {
                Some((b, k)) => (b, Some(k.trim().parse::<u64>().map_err(|_| err("bad keep mask"))?)),
                None => (rest, None),
            };
            match key {
                "width" => width = Some(body.trim().parse().map_err(|_| err("bad width"))?),
                "init" => {
                    init = Some(parse_usizes(body).ok_or_else(|| err("bad init list"))?);
                    init_keep = keep;
                }
                "stack" => {
                    let (v, base) = body.split_once(':').ok_or_else(|| err("expected `stack <v> : <base>`"))?;
                    let vertex = v.trim().parse().map_err(|_| err("bad vertex"))?;
                    let base = parse_usizes(base).ok_or_else(|| err("bad base"))?;
                    let keep = keep.unwrap_or_else(|| full_mask(base.len()));
                    steps.push(StackStep { vertex, base, keep });
                }
                _ => return Err(err("unknown directive")),
            }
        }
        Ok(ConstructionSequence {
            width: width.ok_or(Error::Parse { line: 0, msg: "missing `width`".into() })?,
            init: init.ok_or(Error::Parse { line: 0, msg: "missing `init`".into() })?,
            init_keep,
            steps,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceViolation {
    InitSize { expected: usize, found: usize },
    BaseSize { step: usize, found: usize },
    VertexReused { vertex: usize },
    VertexUnknown { step: usize, vertex: usize },
    VertexIdsNotDense,
    BaseNotClique { step: usize },
    BaseRepeated { step: usize, first: usize },
    KeepTooWide { step: usize },
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SequenceViolation::*;
        match self {
            InitSize { expected, found } => write!(f, "initial clique has {found} vertices, expected {expected}"),
            BaseSize { step, found } => write!(f, "step {step}: base has {found} vertices"),
            VertexReused { vertex } => write!(f, "vertex {vertex} introduced twice"),
            VertexUnknown { step, vertex } => write!(f, "step {step}: base vertex {vertex} does not exist yet"),
            VertexIdsNotDense => write!(f, "vertex ids are not 0..n"),
            BaseNotClique { step } => write!(f, "step {step}: base is not a clique"),
            BaseRepeated { step, first } => write!(f, "step {step}: base already used at step {first}"),
            KeepTooWide { step } => write!(f, "step {step}: keep mask has bits beyond the base"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SequenceCheck {
    pub violations: Vec<SequenceViolation>,
    /// Graph of the present edges.
    pub realized: Graph,
    /// The full k-tree, every stacking edge included.
    pub full: Graph,
}

impl SequenceCheck {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks bases, vertex ids and (optionally) simplicity. Base cliques are
/// checked in the full k-tree, so omitted edges do not matter.
pub fn validate_sequence(seq: &ConstructionSequence, require_simple: bool) -> SequenceCheck {
    let k = seq.width;
    let mut violations = Vec::new();
    if seq.init.len() != k + 1 {
        violations.push(SequenceViolation::InitSize { expected: k + 1, found: seq.init.len() });
    }
    let n = seq.vertex_count();
    let mut seen = vec![false; n];
    let mut dense = true;
    for &v in seq.init.iter().chain(seq.steps.iter().map(|s| &s.vertex)) {
        if v >= n {
            dense = false;
        } else if seen[v] {
            violations.push(SequenceViolation::VertexReused { vertex: v });
        } else {
            seen[v] = true;
        }
    }
    if !dense {
        violations.push(SequenceViolation::VertexIdsNotDense);
    }
    let mut full: HashSet<(usize, usize)> = HashSet::new();
    let mut real = Vec::new();
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    for (a, b) in init_pairs(seq.init.len()) {
        full.insert(norm(seq.init[a], seq.init[b]));
    }
    real.extend(seq.init_edges());
    let mut exists: HashSet<usize> = seq.init.iter().copied().collect();
    let mut used_bases: HashMap<Vec<usize>, usize> = HashMap::new();
    for (i, st) in seq.steps.iter().enumerate() {
        if st.base.len() != k {
            violations.push(SequenceViolation::BaseSize { step: i, found: st.base.len() });
        }
        if st.keep & !full_mask(st.base.len()) != 0 {
            violations.push(SequenceViolation::KeepTooWide { step: i });
        }
        if let Some(&v) = st.base.iter().find(|v| !exists.contains(v)) {
            violations.push(SequenceViolation::VertexUnknown { step: i, vertex: v });
        }
        let clique = st
            .base
            .iter()
            .enumerate()
            .all(|(a, &x)| st.base[a + 1..].iter().all(|&y| x != y && full.contains(&norm(x, y))));
        if !clique {
            violations.push(SequenceViolation::BaseNotClique { step: i });
        }
        let mut key = st.base.clone();
        key.sort_unstable();
        match used_bases.get(&key) {
            Some(&first) if require_simple => violations.push(SequenceViolation::BaseRepeated { step: i, first }),
            Some(_) => {}
            None => {
                used_bases.insert(key, i);
            }
        }
        for (b, &x) in st.base.iter().enumerate() {
            if x != st.vertex {
                full.insert(norm(st.vertex, x));
                if st.keep >> b & 1 == 1 {
                    real.push((st.vertex, x));
                }
            }
        }
        exists.insert(st.vertex);
    }
    let size = n.max(exists.iter().map(|v| v + 1).max().unwrap_or(0));
    SequenceCheck {
        violations,
        realized: Graph::from_edges_lossy(size, real),
        full: Graph::from_edges_lossy(size, full),
    }
}

/// Re-embeds a width-k sequence as a simple width-(k+1) sequence on the same
/// vertices. The bag tree is re-rooted at the bag of the last stacked
/// vertex; the bags hanging off one separator are then chained, each bag
/// borrowing one vertex from its predecessor to fill the larger base.
/// Present edges are exactly those of the input.
pub fn lift_to_simple(seq: &ConstructionSequence) -> Result<ConstructionSequence> {
    let check = validate_sequence(seq, false);
    if let Some(v) = check.violations.first() {
        return Err(Error::InvalidSequence(v.to_string()));
    }
    let Some(last) = seq.steps.last() else {
        return Err(Error::InvalidSequence("lifting needs at least one stacking".into()));
    };
    let real = &check.realized;
    let k = seq.width;

    // bags: 0 is the initial clique, bag i+1 comes from step i
    let mut bags: Vec<Vec<usize>> = vec![sorted(seq.init.clone())];
    for st in &seq.steps {
        let mut b = st.base.clone();
        b.push(st.vertex);
        bags.push(sorted(b));
    }
    let mut containing: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (i, b) in bags.iter().enumerate() {
        for skip in 0..b.len() {
            let sep: Vec<usize> = b.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &x)| x).collect();
            containing.entry(sep).or_default().push(i);
        }
    }

    let root = bags.len() - 1;
    let root_sep = sorted(last.base.clone());
    let l = last.vertex;
    let others: Vec<usize> = containing[&root_sep].iter().copied().filter(|&b| b != root).collect();
    let extra = |b: usize, sep: &[usize]| *bags[b].iter().find(|x| !sep.contains(x)).unwrap();

    let mut init: Vec<usize> = root_sep.clone();
    init.push(l);
    let first = others[0];
    init.push(extra(first, &root_sep));
    let mut out = ConstructionSequence::new(k + 1, init);
    out.set_init_present(|a, b| real.has_edge(a, b));

    // (bag, separator it was reached through, borrowed vertex e_B)
    let mut queue: VecDeque<(usize, Vec<usize>, usize)> = VecDeque::new();
    queue.push_back((root, root_sep.clone(), usize::MAX));
    let mut done_sep: HashSet<Vec<usize>> = HashSet::new();
    done_sep.insert(root_sep.clone());
    // children of the root separator: first one already in init
    let mut prev = l;
    for (idx, &c) in others.iter().enumerate() {
        let x = extra(c, &root_sep);
        if idx > 0 {
            let mut base = root_sep.clone();
            base.push(prev);
            let present: Vec<usize> = base.iter().copied().filter(|&b| real.has_edge(x, b)).collect();
            out.stack_keeping(x, base, &present);
        }
        queue.push_back((c, root_sep.clone(), prev));
        prev = x;
    }
    while let Some((bag, via, borrowed)) = queue.pop_front() {
        if bag == root {
            continue;
        }
        for skip in 0..bags[bag].len() {
            let sep: Vec<usize> = bags[bag].iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &x)| x).collect();
            if sep == via || done_sep.contains(&sep) {
                continue;
            }
            done_sep.insert(sep.clone());
            let children: Vec<usize> = containing[&sep].iter().copied().filter(|&b| b != bag).collect();
            let mut prev = borrowed;
            for c in children {
                let x = extra(c, &sep);
                let mut base = sep.clone();
                base.push(prev);
                let present: Vec<usize> = base.iter().copied().filter(|&b| real.has_edge(x, b)).collect();
                out.stack_keeping(x, base, &present);
                queue.push_back((c, sep.clone(), prev));
                prev = x;
            }
        }
    }
    let lifted = validate_sequence(&out, true);
    if let Some(v) = lifted.violations.first() {
        return Err(Error::InvalidSequence(format!("lift produced an invalid sequence: {v}")));
    }
    if lifted.realized.edges() != real.edges() || lifted.realized.vertex_count() != real.vertex_count() {
        return Err(Error::InvalidSequence("lift changed the realized graph".into()));
    }
    Ok(out)
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star3() -> ConstructionSequence {
        let mut s = ConstructionSequence::new(1, vec![0, 1]);
        s.stack(2, vec![0], 1);
        s.stack(3, vec![0], 1);
        s
    }

    #[test]
    fn validation() {
        let s = star3();
        let c = validate_sequence(&s, false);
        assert!(c.is_ok());
        assert_eq!(c.realized.edge_count(), 3);
        let c = validate_sequence(&s, true);
        assert!(matches!(c.violations[..], [SequenceViolation::BaseRepeated { step: 1, first: 0 }]));
        let mut bad = ConstructionSequence::new(2, vec![0, 1, 2]);
        bad.stack(3, vec![0, 1], 3);
        bad.stack(4, vec![2, 3], 3);
        let c = validate_sequence(&bad, true);
        assert_eq!(c.violations, vec![SequenceViolation::BaseNotClique { step: 1 }]);
    }

    #[test]
    fn text_round_trip() {
        let mut s = star3();
        s.init_keep = Some(1);
        s.steps[1].keep = 0;
        let t = s.to_text();
        assert_eq!(ConstructionSequence::from_text(&t).unwrap(), s);
        let plain = ConstructionSequence::from_text("width 1\ninit 0 1\nstack 2 : 1\n").unwrap();
        assert_eq!(plain.steps[0].keep, 1);
    }

    #[test]
    fn lift_star() {
        let s = star3();
        let lifted = lift_to_simple(&s).unwrap();
        assert_eq!(lifted.width, 2);
        let c = validate_sequence(&lifted, true);
        assert!(c.is_ok());
        assert_eq!(c.realized.edges(), validate_sequence(&s, false).realized.edges());
    }

    #[test]
    fn lift_double_stack_on_triangle() {
        let mut s = ConstructionSequence::new(2, vec![0, 1, 2]);
        s.stack(3, vec![0, 1], 3);
        s.stack(4, vec![0, 1], 3);
        s.stack(5, vec![0, 1], 3);
        s.stack(6, vec![1, 3], 3);
        let lifted = lift_to_simple(&s).unwrap();
        assert!(validate_sequence(&lifted, true).is_ok());
        assert!(lift_to_simple(&ConstructionSequence::new(2, vec![0, 1, 2])).is_err());
    }
}
