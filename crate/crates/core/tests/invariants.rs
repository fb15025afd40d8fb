use proptest::prelude::*;

use ncframe_core::{
    build_pfn_algebra, compute_orders, d_partition, direct_product, handedness, is_distributive,
    is_normal, is_strongly_distributive, is_symmetric, lattice::lattice_isomorphism,
    models::boolean_lattice, rectangular_band, subalgebra_closure, validate_skew_lattice,
    verify_nh, FiniteAlgebra, Hand, Handedness, NcHeytingCandidate, PropertyProfile, SkewLattice,
};

fn all_pass(alg: &FiniteAlgebra) -> bool {
    validate_skew_lattice(alg).iter().all(|r| r.passed)
}

fn generators(size: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::btree_set(0..size, 1..=4).prop_map(|s| s.into_iter().collect())
}

fn base_family() -> Vec<FiniteAlgebra> {
    vec![
        build_pfn_algebra(1).unwrap(),
        rectangular_band(2, Hand::Left).unwrap(),
        rectangular_band(2, Hand::Right).unwrap(),
        rectangular_band(3, Hand::Left).unwrap(),
        boolean_lattice(1).unwrap(),
        boolean_lattice(2).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closures_of_p3_are_sd_skew_lattices(gens in generators(27)) {
        let p = build_pfn_algebra(3).unwrap();
        let sub = subalgebra_closure(&p, &gens, false).unwrap();
        let alg = &sub.algebra;
        prop_assert!(all_pass(alg));
        prop_assert!(is_strongly_distributive(alg).passed);
        prop_assert!(is_symmetric(alg).passed);
        prop_assert!(is_normal(alg).passed);
        prop_assert!(matches!(handedness(alg), Handedness::Left | Handedness::Both));
        for &g in &gens {
            prop_assert!(sub.embedding.contains(&g));
        }
        for x in alg.elements() {
            for y in alg.elements() {
                let (ex, ey) = (sub.embedding[x], sub.embedding[y]);
                prop_assert_eq!(sub.embedding[alg.meet(x, y)], p.meet(ex, ey));
                prop_assert_eq!(sub.embedding[alg.join(x, y)], p.join(ex, ey));
            }
        }
    }

    #[test]
    fn implicative_closures_with_zero_satisfy_nh(gens in generators(27)) {
        let p = build_pfn_algebra(3).unwrap();
        let mut gens = gens;
        gens.push(0);
        let sub = subalgebra_closure(&p, &gens, true).unwrap();
        let cand = NcHeytingCandidate::new(&sub.algebra).unwrap();
        for r in verify_nh(&cand) {
            prop_assert!(r.passed, "{}", r);
        }
    }

    #[test]
    fn classes_are_rectangular_and_quotient_is_lattice(gens in generators(9)) {
        let p = build_pfn_algebra(2).unwrap();
        let alg = subalgebra_closure(&p, &gens, false).unwrap().algebra;
        let part = d_partition(&alg).unwrap();
        for class in part.classes() {
            for &x in class {
                for &y in class {
                    prop_assert_eq!(alg.meet(x, y), alg.join(y, x));
                }
            }
        }
        let q = part.quotient();
        prop_assert!(q.is_commutative());
        prop_assert!(all_pass(q));
        prop_assert!(is_distributive(q).passed);
    }

    #[test]
    fn orders_match_definitions(gens in generators(27)) {
        let p = build_pfn_algebra(3).unwrap();
        let alg = subalgebra_closure(&p, &gens, false).unwrap().algebra;
        let o = compute_orders(&alg).unwrap();
        for x in alg.elements() {
            for y in alg.elements() {
                let leq = alg.meet(x, y) == x && alg.meet(y, x) == x;
                prop_assert_eq!(o.leq(x, y), leq);
                prop_assert_eq!(o.preceq(x, y), alg.meet_sandwich(x, y) == x);
                prop_assert_eq!(o.leq(x, y), alg.join(x, y) == y && alg.join(y, x) == y);
                if leq {
                    prop_assert!(o.preceq(x, y));
                }
            }
        }
    }

    #[test]
    fn products_stay_in_the_variety(i in 0usize..6, j in 0usize..6) {
        let family = base_family();
        let (a, b) = (&family[i], &family[j]);
        let prod = direct_product(a, b).unwrap();
        prop_assert!(all_pass(&prod));
        prop_assert_eq!(
            is_strongly_distributive(&prod).passed,
            is_strongly_distributive(a).passed && is_strongly_distributive(b).passed
        );
        let nb = b.size();
        for x in prod.elements() {
            for y in prod.elements() {
                let m = prod.meet(x, y);
                prop_assert_eq!((m / nb, m % nb), (a.meet(x / nb, y / nb), b.meet(x % nb, y % nb)));
            }
        }
    }

    #[test]
    fn relabelled_boolean_lattices_are_recognised(perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
        let b = boolean_lattice(3).unwrap();
        let relabelled = FiniteAlgebra::from_fns(
            8,
            |x, y| perm[b.meet(inv(&perm, x), inv(&perm, y))],
            |x, y| perm[b.join(inv(&perm, x), inv(&perm, y))],
        )
        .unwrap();
        prop_assert!(lattice_isomorphism(&relabelled, &b).is_some());
    }

    #[test]
    fn mirror_swaps_handedness(gens in generators(9)) {
        let p = build_pfn_algebra(2).unwrap();
        let alg = subalgebra_closure(&p, &gens, false).unwrap().algebra;
        let mirror = alg.mirrored();
        prop_assert!(all_pass(&mirror));
        let expected = match handedness(&alg) {
            Handedness::Left => Handedness::Right,
            Handedness::Right => Handedness::Left,
            other => other,
        };
        prop_assert_eq!(handedness(&mirror), expected);
    }
}

fn inv(perm: &[usize], x: usize) -> usize {
    perm.iter().position(|&p| p == x).unwrap()
}

#[test]
fn product_of_p1_with_itself_matches_p2_profile() {
    let p1 = build_pfn_algebra(1).unwrap();
    let prod = direct_product(&p1, &p1).unwrap();
    let p2 = build_pfn_algebra(2).unwrap();
    let a = PropertyProfile::compute(&SkewLattice::new(&prod).unwrap(), None);
    let b = PropertyProfile::compute(&SkewLattice::new(&p2).unwrap(), None);
    assert_eq!(a.flags(), b.flags());
}

#[test]
fn left_band_times_chain_is_left_handed() {
    let prod = direct_product(
        &rectangular_band(2, Hand::Left).unwrap(),
        &boolean_lattice(1).unwrap(),
    )
    .unwrap();
    assert_eq!(prod.size(), 4);
    assert_eq!(handedness(&prod), Handedness::Left);
}
