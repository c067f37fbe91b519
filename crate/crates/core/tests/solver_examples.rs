use graphcover::classes::TemplateClass::{self, *};
use graphcover::cover::{verify_cover, Mode};
use graphcover::graph::{complete, complete_bipartite, cycle, path, petersen, spider, star, Graph};
use graphcover::solver::*;

fn unlimited() -> Budget {
    Budget::unlimited()
}

fn check(g: &Graph, class: TemplateClass, mode: Mode, r: &SolveResult) {
    let cert = r.certificate.as_ref().expect("feasible result has a certificate");
    let rep = verify_cover(g, cert, class, mode).unwrap();
    assert!(rep.valid, "{:?}", rep.violations);
    let v = r.value.unwrap();
    match mode {
        Mode::Global => assert!(rep.size <= v),
        _ => assert!(rep.max_preimage <= v),
    }
}

fn number(g: &Graph, class: TemplateClass, mode: Mode) -> usize {
    let r = compute_number(g, class, mode, unlimited()).unwrap();
    assert_eq!(r.status, Status::Feasible);
    check(g, class, mode, &r);
    r.value.unwrap()
}

#[test]
fn petersen_cycle_decisions() {
    let p = petersen();
    let r = decide_global(&p, CycleCollection, 3, unlimited()).unwrap();
    assert!(r.is_feasible());
    check(&p, CycleCollection, Mode::Global, &r);
    assert_eq!(decide_global(&p, CycleCollection, 2, unlimited()).unwrap().status, Status::Infeasible);
    assert_eq!(decide_local(&p, CycleCollection, 2, unlimited()).unwrap().status, Status::Infeasible);
    let r = decide_folded(&p, CycleCollection, 2, unlimited()).unwrap();
    assert!(r.is_feasible());
    check(&p, CycleCollection, Mode::Folded, &r);
    let rep = verify_cover(&p, r.certificate.as_ref().unwrap(), CycleCollection, Mode::Folded).unwrap();
    assert_eq!(rep.max_preimage, 2);
}

#[test]
fn path_has_no_cycle_cover() {
    let p = path(4).unwrap();
    assert_eq!(decide_global(&p, CycleCollection, 5, unlimited()).unwrap().status, Status::Infinite);
    assert_eq!(compute_number(&p, CycleCollection, Mode::Local, unlimited()).unwrap().status, Status::Infinite);
    // splitting both ends of an edge gives a 4-cycle over it
    assert_eq!(number(&p, CycleCollection, Mode::Folded), 2);
}

#[test]
fn caterpillar_examples() {
    let k35 = complete_bipartite(3, 5).unwrap();
    assert_eq!(decide_local(&k35, CaterpillarForest, 2, unlimited()).unwrap().status, Status::Infeasible);
    let r = decide_folded(&k35, CaterpillarForest, 2, unlimited()).unwrap();
    assert!(r.is_feasible());
    check(&k35, CaterpillarForest, Mode::Folded, &r);
    let s = spider(3, 2).unwrap();
    assert_eq!(decide_folded(&s, CaterpillarForest, 1, unlimited()).unwrap().status, Status::Infeasible);
    let st = star(5).unwrap();
    assert!(decide_local(&st, StarForest, 1, unlimited()).unwrap().is_feasible());
    assert_eq!(number(&complete_bipartite(3, 3).unwrap(), CaterpillarForest, Mode::Global), 2);
    assert_eq!(number(&complete_bipartite(4, 4).unwrap(), CaterpillarForest, Mode::Folded), 3);
}

#[test]
fn constrained_folded_examples() {
    let c4 = cycle(4).unwrap();
    let r = decide_constrained_folded(&c4, LinearForest, &[1; 4], unlimited()).unwrap();
    assert_eq!(r.status, Status::Infeasible);
    let r = decide_constrained_folded(&c4, CycleCollection, &[1; 4], unlimited()).unwrap();
    assert!(r.is_feasible());
    let k4 = complete(4).unwrap();
    assert!(decide_constrained_folded(&k4, Interval, &[1; 4], unlimited()).unwrap().is_feasible());
}

#[test]
fn packing_examples() {
    let k4 = complete(4).unwrap();
    let g = compute_packing(&k4, Matching, Mode::Global, unlimited()).unwrap();
    assert_eq!(g.value, Some(6));
    assert_eq!(compute_packing(&k4, Matching, Mode::Local, unlimited()).unwrap().value, Some(3));
    assert_eq!(compute_packing(&k4, Matching, Mode::Folded, unlimited()).unwrap().value, Some(3));
    let p3 = path(3).unwrap();
    assert_eq!(compute_packing(&p3, CycleCollection, Mode::Global, unlimited()).unwrap().value, Some(0));
    assert_eq!(compute_packing(&k4, CycleCollection, Mode::Global, unlimited()).unwrap().value, Some(1));
    assert_eq!(
        compute_packing(&complete(5).unwrap(), CycleCollection, Mode::Global, unlimited()).unwrap().value,
        Some(3)
    );
    assert_eq!(
        compute_packing(&complete(5).unwrap(), CycleCollection, Mode::Local, unlimited()).unwrap().value,
        Some(2)
    );
    assert_eq!(
        compute_packing(&complete(5).unwrap(), CycleCollection, Mode::Folded, unlimited()).unwrap().value,
        Some(2)
    );
}

#[test]
fn budget_exhaustion_is_reported() {
    let k35 = complete_bipartite(3, 5).unwrap();
    let r = decide_local(&k35, CaterpillarForest, 2, Budget::nodes(10)).unwrap();
    assert_eq!(r.status, Status::Unknown);
    assert!(r.time_limit_hit);
}
