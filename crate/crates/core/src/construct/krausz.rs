//! Clique covers of line graphs by the edge stars of the root graph.

use crate::cover::{Component, CoverCertificate};
use crate::graph::{complete, line_graph, Graph};

/// Returns `L(h)` and its cover by one clique per non-isolated vertex of
/// `h`. Each line-graph vertex lies in exactly two cliques.
pub fn krausz_cover(h: &Graph) -> (Graph, CoverCertificate) {
    let (l, _) = line_graph(h);
    let mut cert = CoverCertificate::new(l.vertex_count());
    for v in 0..h.vertex_count() {
        let star: Vec<usize> = h.neighbors(v).iter().map(|&w| h.edge_index(v, w).unwrap()).collect();
        if star.is_empty() {
            continue;
        }
        cert.components.push(Component::new(complete(star.len()).expect("nonempty"), star));
    }
    (l, cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::TemplateClass;
    use crate::cover::{verify_cover, Mode};
    use crate::graph::{complete, path};

    #[test]
    fn stars_cover_line_graphs() {
        let (l, cert) = krausz_cover(&path(3).unwrap());
        assert_eq!(l.vertex_count(), 2);
        assert_eq!(cert.components.len(), 3);
        let (l, cert) = krausz_cover(&complete(4).unwrap());
        let rep = verify_cover(&l, &cert, TemplateClass::CliqueCollection, Mode::Local).unwrap();
        assert!(rep.valid && rep.injective);
        assert_eq!(cert.preimage_counts(), vec![2; 6]);
        assert_eq!(cert.components.len(), 4);
    }
}
