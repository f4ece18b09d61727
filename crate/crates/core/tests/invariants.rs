use std::sync::Arc;

use pblring::algebra::{all_hold, check_bl, check_pseudo_bl, check_pseudo_mv, ideal_algebra};
use pblring::classify;
use pblring::{direct_product, quotient, FiniteRing, IdealLattice, RingSpec};
use proptest::prelude::*;

fn small_spec() -> impl Strategy<Value = RingSpec> {
    let leaf = prop_oneof![
        (1usize..=12).prop_map(RingSpec::Zmod),
        (1usize..=4).prop_map(RingSpec::Null),
        (2usize..=3, proptest::collection::vec(0usize..3, 2))
            .prop_map(|(n, c)| RingSpec::Poly(n, c.into_iter().map(|x| x % n).collect())),
        Just(RingSpec::Triangular(Box::new(RingSpec::Zmod(2)), 2)),
        Just(RingSpec::Matrix(Box::new(RingSpec::Zmod(2)), 2)),
    ];
    leaf.prop_recursive(1, 4, 2, |inner| {
        proptest::collection::vec(inner, 2).prop_map(RingSpec::Product)
    })
    .prop_filter("bounded order", |s| {
        s.predicted_order().is_some_and(|n| n <= 96)
    })
}

fn lattice(spec: &RingSpec) -> IdealLattice {
    IdealLattice::new(spec.build().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lattice_operations_are_consistent(spec in small_spec()) {
        let lat = lattice(&spec);
        for i in lat.indices() {
            prop_assert!(lat.leq(lat.bottom(), i) && lat.leq(i, lat.top()));
            for j in lat.indices() {
                let m = lat.meet(i, j);
                let p = lat.product(i, j);
                prop_assert!(lat.leq(p, m));
                prop_assert!(lat.leq(m, i) && lat.leq(i, lat.join(i, j)));
                prop_assert_eq!(lat.meet(i, j), lat.meet(j, i));
                prop_assert_eq!(lat.join(i, j), lat.join(j, i));
                // Residuals are the largest solutions.
                prop_assert!(lat.leq(lat.product(lat.rimp(i, j), i), j));
                prop_assert!(lat.leq(lat.product(i, lat.limp(i, j)), j));
            }
        }
    }

    #[test]
    fn spec_display_round_trips(spec in small_spec()) {
        let text = spec.to_string();
        prop_assert_eq!(RingSpec::parse(&text).unwrap(), spec);
    }

    #[test]
    fn annihilators_of_annihilators(spec in small_spec()) {
        let lat = lattice(&spec);
        for i in lat.indices() {
            // I ⊆ I*⁻ and I ⊆ I⁻*.
            prop_assert!(lat.leq(i, lat.ann_minus(lat.ann_star(i))));
            prop_assert!(lat.leq(i, lat.ann_star(lat.ann_minus(i))));
        }
    }

    #[test]
    fn bl_and_mv_refine_pseudo_bl(spec in small_spec()) {
        let alg = ideal_algebra(&lattice(&spec));
        let pbl = all_hold(&check_pseudo_bl(&alg));
        if all_hold(&check_bl(&alg)) {
            prop_assert!(pbl);
        }
        if pbl && all_hold(&check_pseudo_mv(&alg)) {
            // Every element lies in the MV-center.
            prop_assert_eq!(pblring::algebra::mv_center(&alg).len(), alg.size());
        }
    }

    #[test]
    fn products_count_ideals_multiplicatively_when_unital(a in 1usize..=10, b in 1usize..=10) {
        let ra = Arc::new(pblring::zmod(a).unwrap());
        let rb = Arc::new(pblring::zmod(b).unwrap());
        let p = direct_product(&[ra.clone(), rb.clone()]).unwrap();
        let n = |r: &Arc<FiniteRing>| IdealLattice::new(r.clone()).len();
        prop_assert_eq!(n(p.ring()), n(&ra) * n(&rb));
    }

    #[test]
    fn quotient_lattice_is_the_upper_interval(spec in small_spec()) {
        let lat = lattice(&spec);
        for k in lat.indices() {
            let q = quotient(lat.ring(), &lat.ideal(k));
            let qlat = IdealLattice::new(q.ring().clone());
            let above = lat.indices().filter(|&j| lat.leq(k, j)).count();
            prop_assert_eq!(qlat.len(), above);
            for j in lat.indices().filter(|&j| lat.leq(k, j)) {
                let image = q.project_ideal(&lat.ideal(j));
                prop_assert_eq!(q.lift_ideal(&image), lat.ideal(j));
            }
        }
    }

    #[test]
    fn classification_is_internally_consistent(spec in small_spec()) {
        let lat = lattice(&spec);
        let c = classify::classify(&lat).unwrap();
        let v = |n: &str| c.verdict(n).unwrap();
        prop_assert_eq!(v("multiplication-ring"), v("pblr1"));
        if v("pseudo-bl-ring") && !v("degenerate") {
            prop_assert!(v("generated-by-idempotents") && v("pblr1") && v("pblr2"));
        }
        if v("bl-ring") || v("lukasiewicz-ring") {
            prop_assert!(v("pseudo-bl-ring"));
        }
        if v("pblr2") {
            prop_assert!(v("pblr3"));
        }
    }
}
