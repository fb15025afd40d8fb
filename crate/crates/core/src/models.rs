//! Constructors for concrete instances.
//!
//! The central model is the algebra of partial functions `A → {0,1}` under
//! restriction (`∧`), override (`∨`) and the implication
//! `f → g = g ∪ τ|A∖(dom f ∪ dom g)`, where `τ` is the constant-1 function.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{Elem, FiniteAlgebra, Table};
use crate::error::{AlgebraError, Result};

/// Largest carrier any constructor will allocate.
pub const MAX_CARRIER: usize = 1024;

fn check_budget(size: usize, what: &str) -> Result<()> {
    if size > MAX_CARRIER {
        return Err(AlgebraError::Resource(format!(
            "{what} would have {size} elements, budget is {MAX_CARRIER}"
        )));
    }
    Ok(())
}

/// Value of a partial function at one point; ordered `Undef < Zero < One`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Digit {
    Undef = 0,
    Zero = 1,
    One = 2,
}

impl Digit {
    fn from_trit(t: usize) -> Digit {
        match t {
            0 => Digit::Undef,
            1 => Digit::Zero,
            _ => Digit::One,
        }
    }

    pub fn is_defined(self) -> bool {
        self != Digit::Undef
    }
}

/// A partial function on `{0, .., m-1}` encoded in base 3:
/// `index = Σ digit_i · 3^i`, so index 0 is the empty function and
/// `3^m - 1` is `τ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialFunctionCode {
    digits: Vec<Digit>,
}

impl PartialFunctionCode {
    pub fn from_index(arity: usize, mut index: usize) -> Self {
        let digits = (0..arity)
            .map(|_| {
                let d = Digit::from_trit(index % 3);
                index /= 3;
                d
            })
            .collect();
        PartialFunctionCode { digits }
    }

    pub fn from_digits(digits: Vec<Digit>) -> Self {
        PartialFunctionCode { digits }
    }

    pub fn index(&self) -> usize {
        self.digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * 3 + d as usize)
    }

    pub fn arity(&self) -> usize {
        self.digits.len()
    }

    pub fn digits(&self) -> &[Digit] {
        &self.digits
    }

    pub fn is_total(&self) -> bool {
        self.digits.iter().all(|d| d.is_defined())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Digit, Digit) -> Digit) -> Self {
        PartialFunctionCode {
            digits: self
                .digits
                .iter()
                .zip(&other.digits)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// `f|dom f ∩ dom g`
    pub fn restrict(&self, g: &Self) -> Self {
        self.zip_with(g, |a, b| if b.is_defined() { a } else { Digit::Undef })
    }

    /// `g ∪ f|dom f − dom g`
    pub fn overridden_by(&self, g: &Self) -> Self {
        self.zip_with(g, |a, b| if b.is_defined() { b } else { a })
    }

    /// `g ∪ τ|A − (dom f ∪ dom g)`
    pub fn implies(&self, g: &Self) -> Self {
        self.zip_with(g, |a, b| match (a, b) {
            (_, b) if b.is_defined() => b,
            (Digit::Undef, _) => Digit::One,
            _ => Digit::Undef,
        })
    }
}

impl fmt::Display for PartialFunctionCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .digits
            .iter()
            .enumerate()
            .filter_map(|(i, d)| match d {
                Digit::Undef => None,
                Digit::Zero => Some(format!("{i}↦0")),
                Digit::One => Some(format!("{i}↦1")),
            })
            .collect();
        if parts.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

/// The `3^m`-element algebra of partial functions with restriction, override
/// and implication; zero is the empty function, `t` is `τ`.
pub fn build_pfn_algebra(arity: usize) -> Result<FiniteAlgebra> {
    if arity == 0 {
        return Err(AlgebraError::domain("arity must be at least 1"));
    }
    let size = 3usize
        .checked_pow(arity as u32)
        .filter(|&s| s <= MAX_CARRIER)
        .ok_or_else(|| {
            AlgebraError::Resource(format!(
                "P({arity}) exceeds the budget of {MAX_CARRIER} elements"
            ))
        })?;
    let codes: Vec<PartialFunctionCode> = (0..size)
        .map(|i| PartialFunctionCode::from_index(arity, i))
        .collect();
    let op = |f: fn(&PartialFunctionCode, &PartialFunctionCode) -> PartialFunctionCode| {
        Table::from_fn(size, |x, y| f(&codes[x], &codes[y]).index())
    };
    FiniteAlgebra::new(
        op(PartialFunctionCode::restrict),
        op(PartialFunctionCode::overridden_by),
    )?
    .with_imp(op(PartialFunctionCode::implies))?
    .with_zero(0)?
    .with_top(size - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hand {
    Left,
    Right,
}

impl fmt::Display for Hand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hand::Left => "left",
            Hand::Right => "right",
        })
    }
}

/// Left: `x∧y = x`, `x∨y = y`. Right: the mirror image.
pub fn rectangular_band(n: usize, hand: Hand) -> Result<FiniteAlgebra> {
    if n == 0 {
        return Err(AlgebraError::domain("band must be nonempty"));
    }
    check_budget(n, "rectangular band")?;
    let alg = match hand {
        Hand::Left => FiniteAlgebra::from_fns(n, |x, _| x, |_, y| y)?,
        Hand::Right => FiniteAlgebra::from_fns(n, |_, y| y, |x, _| x)?,
    };
    match n {
        1 => alg.with_zero(0),
        _ => Ok(alg),
    }
}

/// `0 < 1 < … < n-1`
pub fn chain(n: usize) -> Result<FiniteAlgebra> {
    if n == 0 {
        return Err(AlgebraError::domain("chain must be nonempty"));
    }
    check_budget(n, "chain")?;
    FiniteAlgebra::from_fns(n, |x, y| x.min(y), |x, y| x.max(y))?.with_zero(0)
}

/// Subsets of a `k`-set as bitmasks.
pub fn boolean_lattice(k: usize) -> Result<FiniteAlgebra> {
    let size = 1usize
        .checked_shl(k as u32)
        .filter(|&s| s <= MAX_CARRIER)
        .ok_or_else(|| AlgebraError::Resource(format!("2^{k} exceeds the budget")))?;
    FiniteAlgebra::from_fns(size, |x, y| x & y, |x, y| x | y)?.with_zero(0)
}

/// The lattice whose order is `leq`, which must be a partial order with all
/// binary meets and joins.
pub fn lattice_from_order(n: usize, leq: impl Fn(Elem, Elem) -> bool) -> Result<FiniteAlgebra> {
    if n == 0 {
        return Err(AlgebraError::domain("lattice must be nonempty"));
    }
    check_budget(n, "lattice")?;
    let bound = |x: Elem, y: Elem, below: bool| -> Result<Elem> {
        let rel = |a, b| if below { leq(a, b) } else { leq(b, a) };
        let common: Vec<Elem> = (0..n).filter(|&z| rel(z, x) && rel(z, y)).collect();
        common
            .iter()
            .copied()
            .find(|&z| common.iter().all(|&w| rel(w, z)))
            .ok_or_else(|| {
                AlgebraError::domain(format!(
                    "{x} and {y} have no {}",
                    if below { "meet" } else { "join" }
                ))
            })
    };
    let mut meet = Table::from_fn(n, |_, _| 0);
    let mut join = Table::from_fn(n, |_, _| 0);
    for x in 0..n {
        for y in 0..n {
            meet.set(x, y, bound(x, y, true)?);
            join.set(x, y, bound(x, y, false)?);
        }
    }
    let alg = FiniteAlgebra::new(meet, join)?;
    match alg.find_bottom() {
        Some(z) => alg.with_zero(z),
        None => Ok(alg),
    }
}

/// `M3`: bottom 0, atoms 1, 2, 3, top 4.
pub fn diamond() -> FiniteAlgebra {
    lattice_from_order(5, |x, y| x == y || x == 0 || y == 4).expect("M3 is a lattice")
}

/// `N5`: `0 < 1 < 2 < 4` and `0 < 3 < 4`.
pub fn pentagon() -> FiniteAlgebra {
    let above = [
        vec![0, 1, 2, 3, 4],
        vec![1, 2, 4],
        vec![2, 4],
        vec![3, 4],
        vec![4],
    ];
    lattice_from_order(5, |x, y| above[x].contains(&y)).expect("N5 is a lattice")
}

/// Componentwise operations on pairs; `(i, j)` has index `i * |b| + j`.
/// Zero, implication and `t` carry over when both factors have them.
pub fn direct_product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let nb = b.size();
    let size = a.size() * nb;
    check_budget(size, "product")?;
    let pair = |p: Elem| (p / nb, p % nb);
    let lift = |fa: &dyn Fn(Elem, Elem) -> Elem, fb: &dyn Fn(Elem, Elem) -> Elem| {
        Table::from_fn(size, |p, q| {
            let ((x1, y1), (x2, y2)) = (pair(p), pair(q));
            fa(x1, x2) * nb + fb(y1, y2)
        })
    };
    let mut prod = FiniteAlgebra::new(
        lift(&|x, y| a.meet(x, y), &|x, y| b.meet(x, y)),
        lift(&|x, y| a.join(x, y), &|x, y| b.join(x, y)),
    )?;
    if let (Some(za), Some(zb)) = (a.zero(), b.zero()) {
        prod = prod.with_zero(za * nb + zb)?;
    }
    if let (Some(ia), Some(ib)) = (a.imp_table(), b.imp_table()) {
        prod = prod.with_imp(lift(&|x, y| ia.get(x, y), &|x, y| ib.get(x, y)))?;
        if let (Some(ta), Some(tb)) = (a.top_t(), b.top_t()) {
            prod = prod.with_top(ta * nb + tb)?;
        }
    }
    Ok(prod)
}

/// A subalgebra re-indexed densely; `embedding[i]` is the original index of
/// element `i`, in increasing order.
#[derive(Debug, Clone)]
pub struct Subalgebra {
    pub algebra: FiniteAlgebra,
    pub embedding: Vec<Elem>,
}

/// Smallest subset containing `generators` and closed under `∧`, `∨`, and
/// also `→` when `include_imp` is set and `alg` has an implication.
pub fn subalgebra_closure(
    alg: &FiniteAlgebra,
    generators: &[Elem],
    include_imp: bool,
) -> Result<Subalgebra> {
    if generators.is_empty() {
        return Err(AlgebraError::domain("need at least one generator"));
    }
    if let Some(&g) = generators.iter().find(|&&g| g >= alg.size()) {
        return Err(AlgebraError::domain(format!("generator {g} out of range")));
    }
    let with_imp = include_imp && alg.imp_table().is_some();
    let mut members: BTreeSet<Elem> = generators.iter().copied().collect();
    let mut frontier: Vec<Elem> = members.iter().copied().collect();
    while !frontier.is_empty() {
        let snapshot: Vec<Elem> = members.iter().copied().collect();
        let mut fresh = Vec::new();
        for &x in &frontier {
            for &y in &snapshot {
                let mut products = vec![
                    alg.meet(x, y),
                    alg.meet(y, x),
                    alg.join(x, y),
                    alg.join(y, x),
                ];
                if with_imp {
                    products.push(alg.imp(x, y).unwrap());
                    products.push(alg.imp(y, x).unwrap());
                }
                for p in products {
                    if members.insert(p) {
                        fresh.push(p);
                    }
                }
            }
        }
        frontier = fresh;
    }
    let embedding: Vec<Elem> = members.into_iter().collect();
    let algebra = alg.restrict_to(&embedding, with_imp)?;
    Ok(Subalgebra { algebra, embedding })
}

/// Adds a fresh bottom (index 0) and a fresh two-sided top (index n+1);
/// old element `x` becomes `x + 1`.
pub fn adjoin_bounds(alg: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let n = alg.size();
    let top = n + 1;
    check_budget(n + 2, "bounded extension")?;
    let meet = |x: Elem, y: Elem| {
        if x == 0 || y == 0 {
            0
        } else if x == top {
            y
        } else if y == top {
            x
        } else {
            alg.meet(x - 1, y - 1) + 1
        }
    };
    let join = |x: Elem, y: Elem| {
        if x == top || y == top {
            top
        } else if x == 0 {
            y
        } else if y == 0 {
            x
        } else {
            alg.join(x - 1, y - 1) + 1
        }
    };
    FiniteAlgebra::from_fns(n + 2, meet, join)?.with_zero(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_and_pentagon() {
        use crate::properties::is_distributive;
        for lat in [diamond(), pentagon()] {
            assert!(lat.is_commutative());
            assert_eq!(lat.zero(), Some(0));
            assert_eq!(lat.join(1, 3), 4);
            assert!(!is_distributive(&lat).passed);
        }
        assert!(lattice_from_order(2, |x, y| x == y).is_err());
    }

    #[test]
    fn base3_round_trip() {
        for i in 0..27 {
            assert_eq!(PartialFunctionCode::from_index(3, i).index(), i);
        }
        assert!(PartialFunctionCode::from_index(2, 8).is_total());
        assert_eq!(
            PartialFunctionCode::from_index(2, 8).digits(),
            &[Digit::One, Digit::One]
        );
        assert_eq!(PartialFunctionCode::from_index(2, 0).to_string(), "∅");
    }

    #[test]
    fn pfn1_operations() {
        // 0 = ∅, 1 = a↦0, 2 = a↦1
        let p = build_pfn_algebra(1).unwrap();
        assert_eq!(p.meet(1, 2), 1);
        assert_eq!(p.join(1, 2), 2);
        assert_eq!(p.imp(0, 0), Some(2));
        assert_eq!(p.imp(1, 0), Some(0));
        assert_eq!(p.imp(0, 1), Some(1));
        assert_eq!((p.zero(), p.top_t()), (Some(0), Some(2)));
    }

    #[test]
    fn budget_enforced() {
        assert!(matches!(
            build_pfn_algebra(7),
            Err(AlgebraError::Resource(_))
        ));
        assert!(build_pfn_algebra(6).is_ok());
        assert!(matches!(
            chain(MAX_CARRIER + 1),
            Err(AlgebraError::Resource(_))
        ));
    }

    #[test]
    fn rect_band_shape() {
        let l = rectangular_band(2, Hand::Left).unwrap();
        assert_eq!((l.meet(0, 1), l.join(0, 1)), (0, 1));
        let r = rectangular_band(2, Hand::Right).unwrap();
        assert_eq!((r.meet(0, 1), r.join(0, 1)), (1, 0));
        assert_eq!(rectangular_band(1, Hand::Left).unwrap().size(), 1);
    }

    #[test]
    fn closure_of_singleton_is_itself() {
        let p = build_pfn_algebra(2).unwrap();
        for x in p.elements() {
            let s = subalgebra_closure(&p, &[x], false).unwrap();
            assert_eq!(s.embedding, vec![x]);
        }
    }

    #[test]
    fn closure_of_bottom_and_point() {
        let p = build_pfn_algebra(1).unwrap();
        let s = subalgebra_closure(&p, &[0, 1], false).unwrap();
        assert_eq!(s.embedding, vec![0, 1]);
        assert!(s.algebra.is_commutative());
        assert_eq!(s.algebra.zero(), Some(0));
    }

    #[test]
    fn closure_with_imp_reaches_tau() {
        let p = build_pfn_algebra(1).unwrap();
        let s = subalgebra_closure(&p, &[0], true).unwrap();
        assert_eq!(s.embedding, vec![0, 2]);
        assert_eq!(s.algebra.top_t(), Some(1));
    }

    #[test]
    fn product_indexing() {
        let a = chain(2).unwrap();
        let b = rectangular_band(2, Hand::Left).unwrap();
        let p = direct_product(&b, &a).unwrap();
        assert_eq!(p.size(), 4);
        // (0,1) ∧ (1,0) = (0,0)
        assert_eq!(p.meet(1, 2), 0);
        // (0,1) ∨ (1,0) = (1,1)
        assert_eq!(p.join(1, 2), 3);
        assert_eq!(p.zero(), None);
    }
}
