use graphcover::classes::{recognize, ClosureFlag, TemplateClass};
use graphcover::cover::{restrict_cover, verify_cover, Mode};
use graphcover::graph::{blowup, complete_bipartite, Graph};
use graphcover::orient::{arboricity, degeneracy, local_star_arboricity, orient_bounded, pseudoarboricity};
use graphcover::random::{gnp, rng};
use graphcover::solver::{compute_number, decide_folded, decide_global, decide_local, Budget, Status};
use proptest::prelude::*;

/// Graph spanned by the given edges, isolated vertices dropped.
fn spanned(n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut used = vec![false; n];
    for &(u, v) in edges {
        used[u] = true;
        used[v] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&v| used[v]).collect();
    Graph::new(n, edges.iter().copied()).unwrap().induced(&keep)
}

/// Every subgraph of the j-fold blowup that hits each host edge, tried in turn.
fn naive_folded(g: &Graph, class: TemplateClass, j: usize) -> bool {
    let b = blowup(g, j).unwrap();
    let copies: Vec<Vec<(usize, usize)>> = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            (0..j).flat_map(|a| (0..j).map(move |c| (a, c))).map(|(a, c)| (b.copy(u, a), b.copy(v, c))).collect()
        })
        .collect();
    let mut choice = vec![1usize; copies.len()];
    loop {
        let mut edges = Vec::new();
        for (e, &mask) in choice.iter().enumerate() {
            for (i, &ce) in copies[e].iter().enumerate() {
                if mask >> i & 1 == 1 {
                    edges.push(ce);
                }
            }
        }
        if recognize(class, &spanned(b.graph.vertex_count(), &edges)) {
            return true;
        }
        let full = (1usize << (j * j)) - 1;
        let Some(e) = choice.iter().position(|&m| m < full) else { return false };
        choice[e] += 1;
        for c in &mut choice[..e] {
            *c = 1;
        }
    }
}

fn small_graph() -> impl Strategy<Value = Graph> {
    (2usize..=5, any::<u64>(), 0.2f64..0.9).prop_map(|(n, seed, p)| gnp(&mut rng(seed), n, p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn folded_search_matches_blowup_enumeration(g in small_graph(), j in 1usize..=2) {
        prop_assume!(g.edge_count() > 0 && (j == 1 || g.edge_count() <= 4));
        for class in TemplateClass::ALL {
            let r = decide_folded(&g, class, j, Budget::unlimited()).unwrap();
            prop_assert_eq!(r.is_feasible(), naive_folded(&g, class, j), "{} j={} on {:?}", class, j, g.edges());
            if let Some(cert) = &r.certificate {
                prop_assert!(verify_cover(&g, cert, class, Mode::Folded).unwrap().valid);
            }
        }
    }

    #[test]
    fn decisions_are_monotone(g in small_graph()) {
        for class in TemplateClass::ALL {
            for k in 1..4 {
                let b = Budget::unlimited();
                for (lo, hi) in [
                    (decide_global(&g, class, k, b).unwrap(), decide_global(&g, class, k + 1, b).unwrap()),
                    (decide_local(&g, class, k, b).unwrap(), decide_local(&g, class, k + 1, b).unwrap()),
                    (decide_folded(&g, class, k, b).unwrap(), decide_folded(&g, class, k + 1, b).unwrap()),
                ] {
                    prop_assert!(!lo.is_feasible() || hi.is_feasible(), "{} k={}", class, k);
                }
            }
        }
    }

    #[test]
    fn true_closure_flags_hold(seed in any::<u64>(), n in 2usize..8) {
        let g = gnp(&mut rng(seed), n, 0.4);
        for class in TemplateClass::ALL {
            if !recognize(class, &g) {
                continue;
            }
            let flags = class.properties();
            if flags.closed_under_subgraphs {
                for &(u, v) in g.edges() {
                    prop_assert!(recognize(class, &g.edge_subgraph(|a, b| (a, b) != (u, v))), "{}", class);
                }
                for x in 0..n {
                    let rest: Vec<usize> = (0..n).filter(|&y| y != x).collect();
                    prop_assert!(recognize(class, &g.induced(&rest)), "{}", class);
                }
            }
            if flags.closed_under_merging_within_components {
                for comp in g.components() {
                    for (i, &a) in comp.iter().enumerate() {
                        for &b in &comp[i + 1..] {
                            prop_assert!(recognize(class, &g.merge_vertices(a, b)), "{} merge {} {}", class, a, b);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn local_star_search_matches_orientations(seed in any::<u64>(), n in 2usize..=7, p in 0.2f64..0.9) {
        let g = gnp(&mut rng(seed), n, p);
        prop_assume!(g.edge_count() <= 14);
        let r = compute_number(&g, TemplateClass::StarForest, Mode::Local, Budget::unlimited()).unwrap();
        prop_assert_eq!(r.value, Some(best_orientation(&g)));
        if let Some(cert) = &r.certificate {
            let rep = verify_cover(&g, cert, TemplateClass::StarForest, Mode::Local).unwrap();
            prop_assert!(rep.valid && Some(rep.max_preimage) <= r.value);
        }
    }

    #[test]
    fn interval_recognition_matches_orderings(seed in any::<u64>(), n in 1usize..=7, p in 0.2f64..0.8) {
        let g = gnp(&mut rng(seed), n, p);
        prop_assert_eq!(recognize(TemplateClass::Interval, &g), has_interval_ordering(&g));
    }

    #[test]
    fn orientation_brackets(seed in any::<u64>(), n in 2usize..12, p in 0.1f64..0.9) {
        let g = gnp(&mut rng(seed), n, p);
        let pa = pseudoarboricity(&g);
        let (a, wit) = arboricity(&g).unwrap();
        let lsa = local_star_arboricity(&g);
        let (d, _) = degeneracy(&g);
        prop_assert!(pa.value <= a && a <= lsa.value && lsa.value <= pa.value + 1);
        prop_assert!(lsa.value <= d + 1);
        prop_assert!(wit.check(&g));
        let rep = verify_cover(&g, &lsa.certificate, TemplateClass::StarForest, Mode::Local).unwrap();
        prop_assert!(rep.valid && rep.max_preimage <= lsa.value);
        // feasibility is monotone in alpha
        let n = g.vertex_count();
        for t in 0..=pa.value + 1 {
            let lo = orient_bounded(&g, &vec![t; n]).unwrap().is_ok();
            let hi = orient_bounded(&g, &vec![t + 1; n]).unwrap().is_ok();
            prop_assert!(!lo || hi);
            prop_assert_eq!(lo, t >= pa.value);
        }
    }
}

/// Minimum over all orientations of the largest `indeg(v) + [outdeg(v) > 0]`.
fn best_orientation(g: &Graph) -> usize {
    let m = g.edge_count();
    (0u32..1 << m)
        .map(|mask| {
            let mut indeg = vec![0; g.vertex_count()];
            let mut out = vec![0; g.vertex_count()];
            for (e, &(u, v)) in g.edges().iter().enumerate() {
                let (t, h) = if mask >> e & 1 == 1 { (u, v) } else { (v, u) };
                indeg[h] += 1;
                out[t] = 1;
            }
            (0..g.vertex_count()).map(|v| indeg[v] + out[v]).max().unwrap_or(0)
        })
        .min()
        .unwrap()
}

/// Brute force: an ordering where `i < j < k` and `v_i v_k` adjacent forces
/// `v_i v_j` adjacent exists iff the graph is an interval graph.
fn has_interval_ordering(g: &Graph) -> bool {
    fn extend(g: &Graph, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let n = g.vertex_count();
        if order.len() == n {
            return true;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // adding v as the new last vertex k: every earlier i adjacent to v
            // must be adjacent to all vertices between i and v
            let ok = order
                .iter()
                .enumerate()
                .all(|(i, &a)| !g.has_edge(a, v) || order[i + 1..].iter().all(|&b| g.has_edge(a, b)));
            if ok {
                used[v] = true;
                order.push(v);
                if extend(g, order, used) {
                    return true;
                }
                order.pop();
                used[v] = false;
            }
        }
        false
    }
    extend(g, &mut Vec::new(), &mut vec![false; g.vertex_count()])
}

#[test]
fn false_closure_flags_have_counterexamples() {
    for class in TemplateClass::ALL {
        let flags = class.properties();
        for (flag, holds) in [
            (ClosureFlag::Subgraphs, flags.closed_under_subgraphs),
            (ClosureFlag::Merging, flags.closed_under_merging_within_components),
        ] {
            if holds {
                continue;
            }
            let (member, other) = class.counterexample(flag).expect("stored counterexample");
            assert!(recognize(class, &member) && !recognize(class, &other), "{class} {flag:?}");
        }
    }
}

/// At least `n - 2sm` vertices of B lose `m` preimages when the edges of an
/// induced `K_{m,n}` are removed from a caterpillar cover.
#[test]
fn restriction_frees_most_of_b() {
    let mut hosts = Vec::new();
    for n in 3..=5 {
        // K_{2,n} with a pendant at each b, and with a path through B
        let k = complete_bipartite(2, n).unwrap();
        let mut pend = k.edges().to_vec();
        pend.extend((0..n).map(|i| (2 + i, 2 + n + i)));
        hosts.push((Graph::new(2 + 2 * n, pend).unwrap(), n));
        let mut path = k.edges().to_vec();
        path.extend((0..n - 1).map(|i| (2 + i, 3 + i)));
        hosts.push((Graph::new(2 + n, path).unwrap(), n));
    }
    for (g, n) in hosts {
        let m = 2;
        let kmn: Vec<(usize, usize)> =
            g.edges().iter().copied().filter(|&(u, v)| u < 2 && (2..2 + n).contains(&v)).collect();
        for mode in [Mode::Global, Mode::Local, Mode::Folded] {
            let r = compute_number(&g, TemplateClass::CaterpillarForest, mode, Budget::unlimited()).unwrap();
            assert_eq!(r.status, Status::Feasible);
            let phi = r.certificate.unwrap();
            let before = phi.preimage_counts();
            let s = before[..2].iter().copied().max().unwrap();
            let after = restrict_cover(&phi, &kmn).preimage_counts();
            let freed = (2..2 + n).filter(|&b| after[b] + m <= before[b]).count();
            assert!(freed as i64 >= n as i64 - 2 * (s * m) as i64, "{mode} n={n}");
        }
    }
}
