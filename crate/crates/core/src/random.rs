//! Seeded random corpora: G(n, p) graphs and random construction sequences.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
pub use rand_chacha::ChaCha8Rng;

use crate::construct::{validate_sequence, ConstructionSequence};
use crate::graph::Graph;

/// Seeded generator used for every corpus.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph: each pair joined independently with probability `p`.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, edges).expect("pairs are in range")
}

/// Random width-k sequence on n vertices; each edge kept with probability
/// `keep`. With `simple`, every base is used once.
pub fn random_sequence<R: Rng>(rng: &mut R, k: usize, n: usize, keep: f64, simple: bool) -> ConstructionSequence {
    let mut seq = ConstructionSequence::new(k, (0..=k).collect());
    let pairs = (k + 1) * k / 2;
    let mut init_keep = 0u64;
    for i in 0..pairs {
        if rng.gen_bool(keep) {
            init_keep |= 1 << i;
        }
    }
    seq.init_keep = Some(init_keep);
    let mut open: Vec<Vec<usize>> = (0..=k).map(|s| (0..=k).filter(|&v| v != s).collect()).collect();
    for z in k + 1..n {
        let idx = rng.gen_range(0..open.len());
        let base = if simple { open.swap_remove(idx) } else { open[idx].clone() };
        let mut mask = 0u64;
        for i in 0..k {
            if rng.gen_bool(keep) {
                mask |= 1 << i;
            }
        }
        let mut shuffled = base.clone();
        shuffled.shuffle(rng);
        for &q in &base {
            let mut c: Vec<usize> = base.iter().copied().filter(|&x| x != q).collect();
            c.push(z);
            open.push(c);
        }
        seq.stack(z, shuffled, mask);
    }
    seq
}

/// Graph realized by a sequence, whether or not it is valid.
pub fn realized(seq: &ConstructionSequence) -> Graph {
    validate_sequence(seq, false).realized
}
