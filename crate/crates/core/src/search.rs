//! Exhaustive finite-model search over small skew lattices.
//!
//! Tables are filled cell by cell; after every assignment each identity whose
//! cells are all known is re-evaluated, so dead branches are cut early. Labeled
//! models are enumerated (no isomorphism reduction), which is fine up to four
//! or five elements.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::properties::is_strongly_distributive;

type Partial = Vec<Option<Elem>>;

struct Tables {
    n: usize,
    meet: Partial,
    join: Partial,
}

impl Tables {
    fn m(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.meet[x * self.n + y]
    }

    fn j(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.join[x * self.n + y]
    }

    fn associative(&self, op: impl Fn(Elem, Elem) -> Option<Elem>) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let Some(xy) = op(x, y) else { continue };
                for z in 0..n {
                    let left = op(xy, z);
                    let right = op(y, z).and_then(|yz| op(x, yz));
                    if let (Some(l), Some(r)) = (left, right) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn absorptive(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let checks = [
                    self.j(x, y).and_then(|v| self.m(x, v)).map(|v| v == x),
                    self.m(x, y).and_then(|v| self.j(x, v)).map(|v| v == x),
                    self.m(x, y).and_then(|v| self.j(v, y)).map(|v| v == y),
                    self.j(x, y).and_then(|v| self.m(v, y)).map(|v| v == y),
                ];
                if checks.contains(&Some(false)) {
                    return false;
                }
            }
        }
        true
    }
}

fn diagonal(n: usize) -> Partial {
    let mut t = vec![None; n * n];
    for x in 0..n {
        t[x * n + x] = Some(x);
    }
    t
}

fn off_diagonal(n: usize) -> Vec<usize> {
    (0..n * n).filter(|c| c / n != c % n).collect()
}

/// Every skew lattice on `{0, .., n-1}` (labeled, so isomorphic copies repeat).
pub fn skew_lattices_of_order(n: usize) -> Vec<FiniteAlgebra> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let cells = off_diagonal(n);
    let mut tables = Tables {
        n,
        meet: diagonal(n),
        join: diagonal(n),
    };
    fill_meet(&mut tables, &cells, 0, &mut out);
    out
}

fn fill_meet(t: &mut Tables, cells: &[usize], k: usize, out: &mut Vec<FiniteAlgebra>) {
    if k == cells.len() {
        fill_join(t, cells, 0, out);
        return;
    }
    for v in 0..t.n {
        t.meet[cells[k]] = Some(v);
        if t.associative(|x, y| t.m(x, y)) {
            fill_meet(t, cells, k + 1, out);
        }
    }
    t.meet[cells[k]] = None;
}

fn fill_join(t: &mut Tables, cells: &[usize], k: usize, out: &mut Vec<FiniteAlgebra>) {
    if k == cells.len() {
        let n = t.n;
        let alg = FiniteAlgebra::from_fns(
            n,
            |x, y| t.meet[x * n + y].unwrap(),
            |x, y| t.join[x * n + y].unwrap(),
        )
        .expect("complete tables are in range");
        out.push(alg);
        return;
    }
    let (x, y) = (cells[k] / t.n, cells[k] % t.n);
    for v in 0..t.n {
        // x∧(x∨y) = x and (x∨y)∧y = y restrict the candidates up front.
        if t.m(x, v) != Some(x) || t.m(v, y) != Some(y) {
            continue;
        }
        t.join[cells[k]] = Some(v);
        if t.absorptive() && t.associative(|a, b| t.j(a, b)) {
            fill_join(t, cells, k + 1, out);
        }
    }
    t.join[cells[k]] = None;
}

/// Outcome of searching for a noncommutative strongly distributive skew
/// lattice with a two-sided top.
#[derive(Debug, Clone, Default)]
pub struct TopSearchStats {
    pub examined: usize,
    pub strongly_distributive_with_top: usize,
    pub counterexamples: Vec<FiniteAlgebra>,
}

/// Searches every skew lattice of order `1..=max_order`.
pub fn search_sd_with_two_sided_top(max_order: usize) -> TopSearchStats {
    let mut stats = TopSearchStats::default();
    for n in 1..=max_order {
        for alg in skew_lattices_of_order(n) {
            stats.examined += 1;
            if alg.find_two_sided_top().is_none() || !is_strongly_distributive(&alg).passed {
                continue;
            }
            stats.strongly_distributive_with_top += 1;
            if !alg.is_commutative() {
                stats.counterexamples.push(alg);
            }
        }
    }
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::validate_skew_lattice;

    #[test]
    fn order_two_models() {
        // 2-chain in both labelings plus left and right rectangular bands.
        let all = skew_lattices_of_order(2);
        assert_eq!(all.len(), 4);
        for alg in &all {
            assert!(validate_skew_lattice(alg).iter().all(|r| r.passed));
        }
        assert_eq!(all.iter().filter(|a| a.is_commutative()).count(), 2);
    }

    #[test]
    fn order_three_models_are_valid() {
        let all = skew_lattices_of_order(3);
        assert!(!all.is_empty());
        for alg in &all {
            assert!(validate_skew_lattice(alg).iter().all(|r| r.passed));
        }
    }
}
