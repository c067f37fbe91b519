use graphcover_py::{compute_number, generate, krausz_cover, local_star_arboricity, recognize, verify_cover};

#[test]
fn petersen_values_and_round_trip() {
    let (n, edges) = generate("petersen", vec![]).unwrap();
    let (status, value, _, cert) = compute_number(n, edges.clone(), "cycle_collection", "folded", None, None).unwrap();
    assert_eq!((status.as_str(), value), ("feasible", Some(2)));
    let (valid, _, max, _) = verify_cover(n, edges.clone(), &cert.unwrap(), "cycle_collection", "folded").unwrap();
    assert!(valid && max == 2);
    let (lsa, star) = local_star_arboricity(n, edges.clone()).unwrap();
    assert_eq!(lsa, 3);
    assert!(verify_cover(n, edges, &star, "star_forest", "local").unwrap().0);
}

#[test]
fn krausz_on_k4_and_recognition() {
    let (n, edges) = generate("complete", vec![4]).unwrap();
    let (ln, le, cert) = krausz_cover(n, edges).unwrap();
    assert_eq!((ln, le.len()), (6, 12));
    let (valid, size, max, injective) = verify_cover(ln, le, &cert, "clique_collection", "local").unwrap();
    assert!(valid && injective);
    assert_eq!((size, max), (4, 2));
    assert!(recognize("interval", 4, vec![(0, 1), (1, 2), (2, 3)]).unwrap());
    assert!(!recognize("interval", 4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap());
}
