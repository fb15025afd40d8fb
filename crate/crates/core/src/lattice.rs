//! Isomorphism search between finite (commutative) lattices.

use crate::algebra::{Elem, FiniteAlgebra};

fn lattice_leq(lat: &FiniteAlgebra, x: Elem, y: Elem) -> bool {
    lat.meet(x, y) == x
}

/// Join-irreducible elements: not the bottom and not the join of the
/// elements strictly below them.
pub fn join_irreducibles(lat: &FiniteAlgebra) -> Vec<Elem> {
    let Some(bottom) = lat.find_bottom() else {
        return Vec::new();
    };
    lat.elements()
        .filter(|&j| {
            j != bottom && {
                let below = lat
                    .elements()
                    .filter(|&x| x != j && lattice_leq(lat, x, j))
                    .fold(bottom, |acc, x| lat.join(acc, x));
                below != j
            }
        })
        .collect()
}

/// Finds a lattice isomorphism `a → b`, returned as the image of each element.
///
/// Every element of a finite lattice is the join of the join-irreducibles
/// below it, so a candidate is fixed by an order-preserving bijection between
/// join-irreducibles; each candidate is extended and then checked against
/// both tables.
pub fn lattice_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Elem>> {
    if a.size() != b.size() || !a.is_commutative() || !b.is_commutative() {
        return None;
    }
    let (bot_a, bot_b) = (a.find_bottom()?, b.find_bottom()?);
    let ji_a = join_irreducibles(a);
    let ji_b = join_irreducibles(b);
    if ji_a.len() != ji_b.len() {
        return None;
    }
    let mut assignment: Vec<Option<usize>> = vec![None; ji_a.len()];
    let mut used = vec![false; ji_b.len()];
    let mut found = None;
    search(
        a,
        b,
        &ji_a,
        &ji_b,
        bot_a,
        bot_b,
        0,
        &mut assignment,
        &mut used,
        &mut found,
    );
    found
}

#[allow(clippy::too_many_arguments)]
fn search(
    a: &FiniteAlgebra,
    b: &FiniteAlgebra,
    ji_a: &[Elem],
    ji_b: &[Elem],
    bot_a: Elem,
    bot_b: Elem,
    depth: usize,
    assignment: &mut [Option<usize>],
    used: &mut [bool],
    found: &mut Option<Vec<Elem>>,
) {
    if found.is_some() {
        return;
    }
    if depth == ji_a.len() {
        let map: Vec<Elem> = a
            .elements()
            .map(|x| {
                ji_a.iter()
                    .zip(assignment.iter())
                    .filter(|(&j, _)| lattice_leq(a, j, x))
                    .fold(bot_b, |acc, (_, img)| b.join(acc, ji_b[img.unwrap()]))
            })
            .collect();
        if map[bot_a] == bot_b && is_isomorphism(a, b, &map) {
            *found = Some(map);
        }
        return;
    }
    for k in 0..ji_b.len() {
        if used[k] {
            continue;
        }
        let consistent = (0..depth).all(|i| {
            let prev = ji_b[assignment[i].unwrap()];
            lattice_leq(a, ji_a[i], ji_a[depth]) == lattice_leq(b, prev, ji_b[k])
                && lattice_leq(a, ji_a[depth], ji_a[i]) == lattice_leq(b, ji_b[k], prev)
        });
        if !consistent {
            continue;
        }
        used[k] = true;
        assignment[depth] = Some(k);
        search(
            a,
            b,
            ji_a,
            ji_b,
            bot_a,
            bot_b,
            depth + 1,
            assignment,
            used,
            found,
        );
        assignment[depth] = None;
        used[k] = false;
    }
}

/// Bijective and preserving both operations.
pub fn is_isomorphism(a: &FiniteAlgebra, b: &FiniteAlgebra, map: &[Elem]) -> bool {
    let mut hit = vec![false; b.size()];
    for &y in map {
        if y >= b.size() || std::mem::replace(&mut hit[y], true) {
            return false;
        }
    }
    a.elements().all(|x| {
        a.elements().all(|y| {
            map[a.meet(x, y)] == b.meet(map[x], map[y])
                && map[a.join(x, y)] == b.join(map[x], map[y])
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean(k: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fns(1 << k, |x, y| x & y, |x, y| x | y).unwrap()
    }

    fn chain(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fns(n, |x, y| x.min(y), |x, y| x.max(y)).unwrap()
    }

    #[test]
    fn atoms_are_join_irreducible_in_boolean_lattices() {
        assert_eq!(join_irreducibles(&boolean(3)), vec![1, 2, 4]);
        assert_eq!(join_irreducibles(&chain(4)), vec![1, 2, 3]);
    }

    #[test]
    fn relabelled_boolean_lattice_is_found() {
        // 2x2 with elements relabelled by the permutation p.
        let p = [3usize, 0, 2, 1];
        let mut inv = [0usize; 4];
        for (i, &v) in p.iter().enumerate() {
            inv[v] = i;
        }
        let b = boolean(2);
        let relabelled = FiniteAlgebra::from_fns(
            4,
            |x, y| p[b.meet(inv[x], inv[y])],
            |x, y| p[b.join(inv[x], inv[y])],
        )
        .unwrap();
        let map = lattice_isomorphism(&b, &relabelled).unwrap();
        assert!(is_isomorphism(&b, &relabelled, &map));
    }

    #[test]
    fn chain_is_not_boolean() {
        assert!(lattice_isomorphism(&chain(4), &boolean(2)).is_none());
    }
}
