//! Partial functions `A → {0,1}` evaluated straight from the set formulas,
//! without going through digit codes, compared against the built tables.

use std::collections::{BTreeMap, BTreeSet};

use ncframe_core::{
    build_pfn_algebra, d_partition, handedness, implication_t, implication_via_sup,
    is_strongly_distributive, lattice::lattice_isomorphism, models::boolean_lattice,
    validate_skew_lattice, verify_nh, FiniteAlgebra, Handedness, NcHeytingCandidate,
};

type Pf = BTreeMap<usize, bool>;

fn all_partial_functions(m: usize) -> Vec<Pf> {
    let mut out = vec![Pf::new()];
    for a in 0..m {
        out = out
            .into_iter()
            .flat_map(|f| {
                let mut zero = f.clone();
                zero.insert(a, false);
                let mut one = f.clone();
                one.insert(a, true);
                [f, zero, one]
            })
            .collect();
    }
    out
}

/// Undefined, 0 and 1 count as 0, 1 and 2 in base 3, low position first.
fn code(m: usize, f: &Pf) -> usize {
    (0..m).rev().fold(0, |acc, a| {
        acc * 3
            + match f.get(&a) {
                None => 0,
                Some(false) => 1,
                Some(true) => 2,
            }
    })
}

fn dom(f: &Pf) -> BTreeSet<usize> {
    f.keys().copied().collect()
}

fn restrict(f: &Pf, d: &BTreeSet<usize>) -> Pf {
    f.iter()
        .filter(|(a, _)| d.contains(a))
        .map(|(&a, &v)| (a, v))
        .collect()
}

fn tau(m: usize) -> Pf {
    (0..m).map(|a| (a, true)).collect()
}

/// f∧g = f|dom f∩dom g
fn meet(f: &Pf, g: &Pf) -> Pf {
    restrict(f, &dom(f).intersection(&dom(g)).copied().collect())
}

/// f∨g = g∪f|dom f−dom g
fn join(f: &Pf, g: &Pf) -> Pf {
    let mut out = restrict(f, &dom(f).difference(&dom(g)).copied().collect());
    out.extend(g.iter().map(|(&a, &v)| (a, v)));
    out
}

/// f→g = g∪τ|A−(dom f∪dom g)
fn imp(m: usize, f: &Pf, g: &Pf) -> Pf {
    let covered: BTreeSet<usize> = dom(f).union(&dom(g)).copied().collect();
    let rest: BTreeSet<usize> = (0..m).filter(|a| !covered.contains(a)).collect();
    let mut out = restrict(&tau(m), &rest);
    out.extend(g.iter().map(|(&a, &v)| (a, v)));
    out
}

fn assert_tables_match(m: usize, alg: &FiniteAlgebra) {
    let fs = all_partial_functions(m);
    assert_eq!(fs.len(), alg.size());
    for f in &fs {
        for g in &fs {
            let (x, y) = (code(m, f), code(m, g));
            assert_eq!(alg.meet(x, y), code(m, &meet(f, g)), "meet {f:?} {g:?}");
            assert_eq!(alg.join(x, y), code(m, &join(f, g)), "join {f:?} {g:?}");
            assert_eq!(
                alg.imp(x, y),
                Some(code(m, &imp(m, f, g))),
                "imp {f:?} {g:?}"
            );
        }
    }
    assert_eq!(alg.zero(), Some(code(m, &Pf::new())));
    assert_eq!(alg.top_t(), Some(code(m, &tau(m))));
}

#[test]
fn tables_agree_with_set_formulas() {
    for m in 1..=3 {
        assert_tables_match(m, &build_pfn_algebra(m).unwrap());
    }
}

#[test]
fn single_point_values() {
    let p = build_pfn_algebra(1).unwrap();
    let (empty, zero, one) = (0, 1, 2);
    assert_eq!(p.meet(zero, one), zero);
    assert_eq!(p.join(zero, one), one);
    assert_eq!(p.imp(empty, empty), Some(one));
}

#[test]
fn left_handed_strongly_distributive_heyting() {
    for m in 1..=3 {
        let p = build_pfn_algebra(m).unwrap();
        assert!(validate_skew_lattice(&p).iter().all(|r| r.passed));
        assert_eq!(handedness(&p), Handedness::Left);
        assert!(is_strongly_distributive(&p).passed);
        let cand = NcHeytingCandidate::new(&p).unwrap();
        let bad: Vec<_> = verify_nh(&cand).into_iter().filter(|r| !r.passed).collect();
        assert!(bad.is_empty(), "m={m}: {bad:?}");
    }
}

#[test]
fn nh5_reduces_to_restricted_tau() {
    let m = 2;
    let p = build_pfn_algebra(m).unwrap();
    let fs = all_partial_functions(m);
    let t = tau(m);
    for f in &fs {
        for g in &fs {
            for h in &fs {
                let d: BTreeSet<usize> = dom(g).intersection(&dom(h)).copied().collect();
                let free: BTreeSet<usize> = (0..m).filter(|a| !dom(f).contains(a)).collect();
                let expected = code(m, &restrict(&t, &free.union(&d).copied().collect()));
                let inner = meet(&meet(&meet(&t, g), h), &t);
                assert_eq!(code(m, &imp(m, f, &inner)), expected);
                let (x, y, z) = (code(m, f), code(m, g), code(m, h));
                let ti = code(m, &t);
                let ty = p.meet_sandwich(ti, y);
                let tz = p.meet_sandwich(ti, z);
                let rhs = p.meet(p.imp(x, ty).unwrap(), p.imp(x, tz).unwrap());
                assert_eq!(rhs, expected);
            }
        }
    }
}

#[test]
fn implication_constructions_match_formula_for_every_t() {
    for m in 1..=3 {
        let p = build_pfn_algebra(m).unwrap();
        let fs = all_partial_functions(m);
        let totals: Vec<&Pf> = fs.iter().filter(|f| f.len() == m).collect();
        for t in totals {
            let ti = code(m, t);
            let table = implication_t(&p, ti).unwrap();
            for f in &fs {
                for g in &fs {
                    // The formula with τ replaced by the total function t.
                    let covered: BTreeSet<usize> = dom(f).union(&dom(g)).copied().collect();
                    let rest: BTreeSet<usize> = (0..m).filter(|a| !covered.contains(a)).collect();
                    let mut expected = restrict(t, &rest);
                    expected.extend(g.iter().map(|(&a, &v)| (a, v)));
                    let (x, y) = (code(m, f), code(m, g));
                    assert_eq!(table.get(x, y), code(m, &expected));
                    if m <= 2 {
                        assert_eq!(
                            implication_via_sup(&p, ti, x, y).unwrap(),
                            code(m, &expected)
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn quotient_is_power_set() {
    for m in 1..=3 {
        let p = build_pfn_algebra(m).unwrap();
        let part = d_partition(&p).unwrap();
        assert_eq!(part.len(), 1 << m);
        let iso = lattice_isomorphism(part.quotient(), &boolean_lattice(m).unwrap());
        assert!(iso.is_some(), "m={m}");
        // Classes are the sets of functions sharing a domain; the top class
        // is the total functions.
        for class in part.classes() {
            let d = dom(&all_partial_functions(m)
                .into_iter()
                .find(|f| code(m, f) == class[0])
                .unwrap());
            assert_eq!(class.len(), 1 << d.len());
        }
        let top = part.class(part.top_class_id());
        assert_eq!(top.len(), 1 << m);
    }
}
