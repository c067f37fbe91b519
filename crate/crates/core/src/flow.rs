//! Dinic max-flow on small integral networks.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: i64,
}

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    /// Adds `from -> to`; returns the arc id. Its reverse is `id ^ 1`.
    pub(crate) fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap });
        self.arcs.push(Arc { to: from, cap: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
        id
    }

    /// Flow currently on arc `id`.
    pub(crate) fn flow(&self, id: usize) -> i64 {
        self.arcs[id ^ 1].cap
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.out.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &a in &self.out[x] {
                let y = self.arcs[a].to;
                if self.arcs[a].cap > 0 && level[y] == usize::MAX {
                    level[y] = level[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        level
    }

    fn push(&mut self, x: usize, t: usize, limit: i64, level: &[usize], next: &mut [usize]) -> i64 {
        if x == t {
            return limit;
        }
        while next[x] < self.out[x].len() {
            let a = self.out[x][next[x]];
            let y = self.arcs[a].to;
            if self.arcs[a].cap > 0 && level[y] == level[x] + 1 {
                let got = self.push(y, t, limit.min(self.arcs[a].cap), level, next);
                if got > 0 {
                    self.arcs[a].cap -= got;
                    self.arcs[a ^ 1].cap += got;
                    return got;
                }
            }
            next[x] += 1;
        }
        0
    }

    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return total;
            }
            let mut next = vec![0; self.out.len()];
            loop {
                let f = self.push(s, t, i64::MAX, &level, &mut next);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network.
    pub(crate) fn residual_reachable(&self, s: usize) -> Vec<bool> {
        self.levels(s).into_iter().map(|l| l != usize::MAX).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond() {
        let mut f = FlowNetwork::new(4);
        f.add_arc(0, 1, 3);
        f.add_arc(0, 2, 2);
        f.add_arc(1, 2, 5);
        f.add_arc(1, 3, 2);
        f.add_arc(2, 3, 3);
        assert_eq!(f.max_flow(0, 3), 5);
        let r = f.residual_reachable(0);
        assert!(r[0] && !r[3]);
    }
}
