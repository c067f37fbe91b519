//! Folded linear-forest covers from Euler tours.

use crate::cover::{walks_to_certificate, CoverCertificate};
use crate::error::Result;
use crate::graph::{euler_tours_from, Graph, Walk};

/// Splits Euler tours into walks. Odd-degree vertices are joined to an
/// auxiliary vertex first, and its visits cut the tour into open walks;
/// components without odd vertices keep one closed tour from a vertex of
/// minimum degree. At most `ceil((D+1)/2)` copies per vertex, and
/// `ceil(D/2)` when every component has an odd-degree vertex.
pub fn flac_walks(g: &Graph) -> Vec<Walk> {
    let n = g.vertex_count();
    let x = n;
    let mut edges = g.edges().to_vec();
    edges.extend((0..n).filter(|&v| g.degree(v) % 2 == 1).map(|v| (v, x)));
    let aug = Graph::new(n + 1, edges).expect("auxiliary vertex is fresh");
    let tours = euler_tours_from(&aug, &[x]).expect("all degrees are even");
    let mut walks = Vec::new();
    for t in tours {
        if !t.0.contains(&x) {
            walks.push(t);
            continue;
        }
        for piece in t.0.split(|&v| v == x) {
            if piece.len() >= 2 {
                walks.push(Walk(piece.to_vec()));
            }
        }
    }
    walks
}

pub fn flac_cover(g: &Graph) -> Result<CoverCertificate> {
    walks_to_certificate(g, &flac_walks(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::TemplateClass;
    use crate::cover::{verify_cover, Mode};
    use crate::graph::{complete, cycle, path};

    fn max_pre(g: &Graph) -> usize {
        let cert = flac_cover(g).unwrap();
        let rep = verify_cover(g, &cert, TemplateClass::LinearForest, Mode::Folded).unwrap();
        assert!(rep.valid, "{:?}", rep.violations);
        rep.max_preimage
    }

    #[test]
    fn small_cases() {
        assert_eq!(max_pre(&path(5).unwrap()), 1);
        assert_eq!(max_pre(&cycle(4).unwrap()), 2);
        assert_eq!(max_pre(&complete(4).unwrap()), 2);
        assert_eq!(max_pre(&complete(5).unwrap()), 3);
    }
}
