use graphcover::classes::{recognize, TemplateClass};
use graphcover::construct::{lift_to_simple, slug_cover, validate_sequence};
use graphcover::cover::{verify_cover, Mode};
use graphcover::random::{random_sequence, realized, rng};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lift_is_simple_and_keeps_edges(seed in any::<u64>(), k in 1usize..4, n in 2usize..25, keep in 0.0f64..1.0) {
        let mut r = rng(seed);
        let seq = random_sequence(&mut r, k, n.max(k + 2), keep, false);
        let lifted = lift_to_simple(&seq).unwrap();
        prop_assert_eq!(lifted.width, k + 1);
        let check = validate_sequence(&lifted, true);
        prop_assert!(check.is_ok(), "{:?}", check.violations);
        let orig = realized(&seq);
        prop_assert_eq!(check.realized.edges(), orig.edges());
    }

    #[test]
    fn slug_cover_on_simple_sequences(seed in any::<u64>(), k in 3usize..6, n in 4usize..40, keep in 0.3f64..1.0) {
        let mut r = rng(seed);
        let seq = random_sequence(&mut r, k, n.max(k + 1), keep, true);
        let g = realized(&seq);
        let cert = slug_cover(&g, &seq).unwrap();
        let rep = verify_cover(&g, &cert, TemplateClass::Interval, Mode::Local).unwrap();
        prop_assert!(rep.valid && rep.injective);
        prop_assert!(rep.max_preimage <= k);
        for c in &cert.components {
            prop_assert!(recognize(TemplateClass::Interval, &c.template));
        }
    }

    #[test]
    fn slug_cover_after_lifting(seed in any::<u64>(), k in 1usize..3, n in 4usize..30, keep in 0.3f64..1.0) {
        let mut r = rng(seed);
        let seq = random_sequence(&mut r, k, n, keep, false);
        let g = realized(&seq);
        let cert = slug_cover(&g, &seq).unwrap();
        prop_assert!(verify_cover(&g, &cert, TemplateClass::Interval, Mode::Local).unwrap().valid);
        prop_assert!(cert.max_preimage() <= 3);
    }
}
