//! Heyting implication on finite distributive lattices and its
//! noncommutative counterpart on strongly distributive skew lattices.
//!
//! On a strongly distributive skew lattice `S` with zero whose quotient
//! `S/D` is a Heyting algebra, each `t` in the top `D`-class determines an
//! implication `x →_t y = y ∨ u ∨ y`, where `u` is the unique element of the
//! class `D_x → D_y` lying below `t`. When `S` is a noncommutative frame the
//! same operation is also the join, inside the lattice `(b∨t∨b)↓`, of all `x`
//! there with `x ∧ (b∨(t∧a∧t)∨b) ≤ b`. Both routes live here so they can be
//! compared against each other.

use crate::algebra::{pair_report, triple_report, Elem, FiniteAlgebra, SkewLattice, Table};
use crate::error::{AlgebraError, Result};
use crate::properties::{commuting_subsets, is_strongly_distributive};
use crate::report::CheckReport;

fn lattice_leq(lat: &FiniteAlgebra, x: Elem, y: Elem) -> bool {
    lat.meet(x, y) == x
}

fn lattice_top(lat: &FiniteAlgebra) -> Option<Elem> {
    lat.elements()
        .find(|&c| lat.elements().all(|d| lat.join(c, d) == c))
}

/// The largest `z` with `z ∧ x ≤ y`, found by a full scan.
///
/// Errors when `lat` is not commutative or when the candidate set has no
/// maximum (which happens exactly when the lattice is not Heyting).
pub fn heyting_implication(lat: &FiniteAlgebra, x: Elem, y: Elem) -> Result<Elem> {
    if !lat.is_commutative() {
        return Err(AlgebraError::domain("Heyting implication needs a lattice"));
    }
    heyting_implication_unchecked(lat, x, y)
}

fn heyting_implication_unchecked(lat: &FiniteAlgebra, x: Elem, y: Elem) -> Result<Elem> {
    let candidates: Vec<Elem> = lat
        .elements()
        .filter(|&z| lattice_leq(lat, lat.meet(z, x), y))
        .collect();
    candidates
        .iter()
        .copied()
        .find(|&c| candidates.iter().all(|&z| lattice_leq(lat, z, c)))
        .ok_or_else(|| {
            AlgebraError::domain(format!(
                "no largest z with z∧{x} ≤ {y}; lattice is not Heyting"
            ))
        })
}

/// Full implication table of a finite lattice.
pub fn heyting_table(lat: &FiniteAlgebra) -> Result<Table> {
    if !lat.is_commutative() {
        return Err(AlgebraError::domain("Heyting implication needs a lattice"));
    }
    let n = lat.size();
    let mut cells = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            cells.push(heyting_implication_unchecked(lat, x, y)?);
        }
    }
    let rows: Vec<Vec<Elem>> = cells.chunks(n).map(<[Elem]>::to_vec).collect();
    Table::from_rows(&rows)
}

/// Equips a finite lattice with its Heyting implication, zero and `t = 1`.
pub fn with_heyting_implication(lat: &FiniteAlgebra) -> Result<FiniteAlgebra> {
    let imp = heyting_table(lat)?;
    let zero = lat
        .find_bottom()
        .ok_or_else(|| AlgebraError::domain("lattice has no bottom"))?;
    let one = lattice_top(lat).ok_or_else(|| AlgebraError::domain("lattice has no top"))?;
    lat.clone().with_imp(imp)?.with_zero(zero)?.with_top(one)
}

/// A bounded lattice with an implication table.
#[derive(Debug, Clone)]
pub struct HeytingLattice {
    base: FiniteAlgebra,
    one: Elem,
    zero: Elem,
}

impl HeytingLattice {
    /// Computes the implication of a finite lattice; fails if it is not Heyting.
    pub fn from_lattice(lat: &FiniteAlgebra) -> Result<Self> {
        HeytingLattice::from_parts(with_heyting_implication(lat)?)
    }

    /// Wraps a commutative bounded algebra carrying an implication table,
    /// without checking the Heyting laws (see [`HeytingLattice::check_axioms`]).
    pub fn from_parts(base: FiniteAlgebra) -> Result<Self> {
        if !base.is_commutative() {
            return Err(AlgebraError::domain("Heyting lattice must be commutative"));
        }
        if base.imp_table().is_none() {
            return Err(AlgebraError::Structural("missing implication table".into()));
        }
        let zero = base
            .find_bottom()
            .ok_or_else(|| AlgebraError::domain("lattice has no bottom"))?;
        let one = lattice_top(&base).ok_or_else(|| AlgebraError::domain("lattice has no top"))?;
        Ok(HeytingLattice { base, one, zero })
    }

    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.base
    }

    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.base.imp(x, y).expect("checked at construction")
    }

    pub fn imp_table(&self) -> &Table {
        self.base.imp_table().expect("checked at construction")
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    /// Distributivity, (H1)–(H4) and the adjunction `x∧y ≤ z ⇔ x ≤ y→z`.
    pub fn check_axioms(&self) -> Vec<CheckReport> {
        let l = &self.base;
        let n = l.size();
        let imp = |x, y| self.imp(x, y);
        vec![
            triple_report("distributive lattice", n, |x, y, z| {
                l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))
            }),
            CheckReport::from_witness(
                "H1 x→x=1",
                l.elements()
                    .find(|&x| imp(x, x) != self.one)
                    .map(|x| vec![x]),
            ),
            pair_report("H2 x∧(x→y)=x∧y", n, |x, y| {
                l.meet(x, imp(x, y)) != l.meet(x, y)
            }),
            pair_report("H3 y∧(x→y)=y", n, |x, y| l.meet(y, imp(x, y)) != y),
            triple_report("H4 x→(y∧z)=(x→y)∧(x→z)", n, |x, y, z| {
                imp(x, l.meet(y, z)) != l.meet(imp(x, y), imp(x, z))
            }),
            triple_report("HA x∧y≤z ⇔ x≤y→z", n, |x, y, z| {
                lattice_leq(l, l.meet(x, y), z) != lattice_leq(l, x, imp(y, z))
            }),
        ]
    }
}

/// A skew lattice carrying `→`, a zero and a distinguished `t`, i.e. a
/// candidate for the noncommutative Heyting axioms.
#[derive(Debug, Clone, Copy)]
pub struct NcHeytingCandidate<'a> {
    alg: &'a FiniteAlgebra,
    zero: Elem,
    t: Elem,
}

impl<'a> NcHeytingCandidate<'a> {
    pub fn new(alg: &'a FiniteAlgebra) -> Result<Self> {
        if alg.imp_table().is_none() {
            return Err(AlgebraError::Structural("missing implication table".into()));
        }
        let zero = alg
            .zero()
            .ok_or_else(|| AlgebraError::Structural("missing zero".into()))?;
        let t = alg
            .top_t()
            .ok_or_else(|| AlgebraError::Structural("missing distinguished t".into()))?;
        Ok(NcHeytingCandidate { alg, zero, t })
    }

    pub fn algebra(&self) -> &'a FiniteAlgebra {
        self.alg
    }

    pub fn t(&self) -> Elem {
        self.t
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }
}

/// Exhaustive check of NH1–NH5, of `x∧t∧x = x` and of `y ≤ x→y`.
pub fn verify_nh(cand: &NcHeytingCandidate<'_>) -> Vec<CheckReport> {
    let a = cand.alg;
    let t = cand.t;
    let n = a.size();
    let imp = |x, y| a.imp(x, y).expect("candidate has an implication");
    let m = |x, y| a.meet(x, y);
    let j = |x, y| a.join(x, y);
    let tt = |x| a.meet_sandwich(t, x);
    vec![
        pair_report("NH1 x→y=(y∨(t∧x∧t)∨y)→y", n, |x, y| {
            imp(x, y) != imp(a.join_sandwich(y, tt(x)), y)
        }),
        CheckReport::from_witness(
            "NH2 x→x=x∨t∨x",
            a.elements()
                .find(|&x| imp(x, x) != a.join_sandwich(x, t))
                .map(|x| vec![x]),
        ),
        pair_report("NH3 x∧(x→y)∧x=x∧y∧x", n, |x, y| {
            a.meet_sandwich(x, imp(x, y)) != a.meet_sandwich(x, y)
        }),
        pair_report("NH4 y∧(x→y)=y=(x→y)∧y", n, |x, y| {
            m(y, imp(x, y)) != y || m(imp(x, y), y) != y
        }),
        triple_report(
            "NH5 x→(t∧y∧z∧t)=(x→(t∧y∧t))∧(x→(t∧z∧t))",
            n,
            |x, y, z| imp(x, tt(m(y, z))) != m(imp(x, tt(y)), imp(x, tt(z))),
        ),
        CheckReport::from_witness(
            "x∧t∧x=x",
            a.elements()
                .find(|&x| a.meet_sandwich(x, t) != x)
                .map(|x| vec![x]),
        ),
        pair_report("y≤x→y", n, |x, y| {
            let v = imp(x, y);
            m(y, v) != y || m(v, y) != y || j(y, v) != v || j(v, y) != v
        }),
    ]
}

/// Finds the element of the `D`-class `class_members` lying below `a`,
/// computed as `a ∧ x ∧ a` for a member `x` and cross-checked by scanning
/// the whole class for other elements below `a`.
pub fn unique_below(sl: &SkewLattice<'_>, class_members: &[Elem], a: Elem) -> Result<Elem> {
    let alg = sl.algebra();
    let p = sl.partition();
    let &first = class_members
        .first()
        .ok_or_else(|| AlgebraError::domain("empty class"))?;
    let class = p.class_of(first);
    if class_members.iter().any(|&x| p.class_of(x) != class) {
        return Err(AlgebraError::domain("members do not form one D-class"));
    }
    if !p.class_above(p.class_of(a), class) {
        return Err(AlgebraError::domain(format!(
            "class of {a} is not above the given class"
        )));
    }
    let b = alg.meet_sandwich(a, first);
    if !sl.leq(b, a) || p.class_of(b) != class {
        return Err(AlgebraError::inconsistent(
            "a∧x∧a is not below a in the class",
            vec![a, first, b],
        ));
    }
    if let Some(&other) = p.class(class).iter().find(|&&c| c != b && sl.leq(c, a)) {
        return Err(AlgebraError::inconsistent(
            "two class members below a",
            vec![a, b, other],
        ));
    }
    Ok(b)
}

/// A strongly distributive skew lattice with zero whose quotient has been
/// equipped with its Heyting implication.
#[derive(Debug, Clone)]
pub struct NcStructure<'a> {
    sl: SkewLattice<'a>,
    quotient: HeytingLattice,
    zero: Elem,
}

impl<'a> NcStructure<'a> {
    pub fn new(alg: &'a FiniteAlgebra) -> Result<Self> {
        let sl = SkewLattice::new(alg)?;
        NcStructure::from_skew(sl)
    }

    pub fn from_skew(sl: SkewLattice<'a>) -> Result<Self> {
        let alg = sl.algebra();
        let sd = is_strongly_distributive(alg);
        if !sd.passed {
            return Err(AlgebraError::domain(format!(
                "not strongly distributive: {sd}"
            )));
        }
        let zero = alg
            .zero()
            .or_else(|| alg.find_bottom())
            .ok_or_else(|| AlgebraError::domain("no zero"))?;
        let quotient = HeytingLattice::from_lattice(sl.partition().quotient())
            .map_err(|e| AlgebraError::domain(format!("quotient is not a Heyting algebra: {e}")))?;
        Ok(NcStructure { sl, quotient, zero })
    }

    pub fn skew(&self) -> &SkewLattice<'a> {
        &self.sl
    }

    pub fn quotient(&self) -> &HeytingLattice {
        &self.quotient
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    fn check_top(&self, t: Elem) -> Result<()> {
        if t >= self.sl.algebra().size() || !self.sl.in_top_class(t) {
            return Err(AlgebraError::domain(format!(
                "{t} is not in the top D-class"
            )));
        }
        Ok(())
    }

    /// `x →_t y`
    pub fn implication_t_at(&self, t: Elem, x: Elem, y: Elem) -> Result<Elem> {
        self.check_top(t)?;
        self.imp_t(t, x, y)
    }

    fn imp_t(&self, t: Elem, x: Elem, y: Elem) -> Result<Elem> {
        let p = self.sl.partition();
        let class = self.quotient.imp(p.class_of(x), p.class_of(y));
        let u = unique_below(&self.sl, p.class(class), t)?;
        Ok(self.sl.algebra().join_sandwich(y, u))
    }

    /// The whole `→_t` table.
    pub fn implication_t(&self, t: Elem) -> Result<Table> {
        self.check_top(t)?;
        let n = self.sl.algebra().size();
        let mut rows = Vec::with_capacity(n);
        for x in 0..n {
            rows.push(
                (0..n)
                    .map(|y| self.imp_t(t, x, y))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Table::from_rows(&rows)
    }

    /// `self.algebra()` equipped with `→_t`, its zero and `t`.
    pub fn candidate_for(&self, t: Elem) -> Result<FiniteAlgebra> {
        let imp = self.implication_t(t)?;
        self.sl
            .algebra()
            .clone()
            .with_imp(imp)?
            .with_zero(self.zero)?
            .with_top(t)
    }

    /// `a → b` as the join, inside the lattice `(b∨t∨b)↓`, of every `x`
    /// there with `x ∧ (b∨(t∧a∧t)∨b) ≤ b`.
    ///
    /// Only meaningful on a noncommutative frame; see [`is_nc_frame`].
    pub fn implication_via_sup(&self, t: Elem, a: Elem, b: Elem) -> Result<Elem> {
        self.check_top(t)?;
        let alg = self.sl.algebra();
        let local_top = alg.join_sandwich(b, t);
        let guard = alg.join_sandwich(b, alg.meet_sandwich(t, a));
        let down = self.sl.down_set(local_top);
        if !down.lattice.passed {
            return Err(AlgebraError::inconsistent(
                "(b∨t∨b)↓ is not a lattice",
                down.lattice.witness.unwrap_or_default(),
            ));
        }
        let sup = down
            .members
            .iter()
            .copied()
            .filter(|&x| self.sl.leq(alg.meet(x, guard), b))
            .fold(self.zero, |acc, x| alg.join(acc, x));
        if !self.sl.leq(sup, local_top) {
            return Err(AlgebraError::inconsistent(
                "join escaped (b∨t∨b)↓",
                vec![a, b, sup],
            ));
        }
        Ok(sup)
    }

    pub fn implication_via_sup_table(&self, t: Elem) -> Result<Table> {
        let n = self.sl.algebra().size();
        let mut rows = Vec::with_capacity(n);
        for a in 0..n {
            rows.push(
                (0..n)
                    .map(|b| self.implication_via_sup(t, a, b))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        Table::from_rows(&rows)
    }
}

/// `x →_t y` for the whole carrier.
pub fn implication_t(alg: &FiniteAlgebra, t: Elem) -> Result<Table> {
    NcStructure::new(alg)?.implication_t(t)
}

/// Single entry of the supremum formula, after confirming the frame laws
/// with full commuting-subset enumeration.
pub fn implication_via_sup(alg: &FiniteAlgebra, t: Elem, a: Elem, b: Elem) -> Result<Elem> {
    let nc = NcStructure::new(alg)?;
    let frame = is_nc_frame(nc.skew(), None);
    if !frame.passed {
        return Err(AlgebraError::domain(format!(
            "not a noncommutative frame: {frame}"
        )));
    }
    nc.implication_via_sup(t, a, b)
}

/// Strong distributivity, join completeness, and both infinite distributive
/// laws over every commuting subset with at most `cap` members (`None` is
/// full enumeration, exponential in the worst case).
///
/// On failure the witness is `y` followed by the subset's members.
pub fn is_nc_frame(sl: &SkewLattice<'_>, cap: Option<usize>) -> CheckReport {
    const NAME: &str = "noncommutative frame";
    let alg = sl.algebra();
    let sd = is_strongly_distributive(alg);
    if !sd.passed {
        return sd.renamed(NAME);
    }
    let orders = sl.orders();
    let mut image = Vec::new();
    for subset in commuting_subsets(sl, cap) {
        let Some(sup) = subset.supremum else {
            return CheckReport::fail(NAME, subset.members);
        };
        for y in alg.elements() {
            let laws: [(Elem, &dyn Fn(Elem) -> Elem); 2] = [
                (alg.meet(sup, y), &|x| alg.meet(x, y)),
                (alg.meet(y, sup), &|x| alg.meet(y, x)),
            ];
            for (lhs, f) in laws {
                image.clear();
                image.extend(subset.members.iter().map(|&x| f(x)));
                if orders.supremum(&image) != Some(lhs) {
                    let mut w = vec![y];
                    w.extend_from_slice(&subset.members);
                    return CheckReport::fail(NAME, w);
                }
            }
        }
    }
    CheckReport::pass(NAME)
}

/// `φ(x) = t'∧x∧t'` from `t↓` to `t'↓` with the checks that it is a Heyting
/// isomorphism inverted by `ψ(y) = t∧y∧t` and that `x D φ(x)`.
#[derive(Debug, Clone)]
pub struct SectionMap {
    pub pairs: Vec<(Elem, Elem)>,
    pub checks: Vec<CheckReport>,
}

pub fn phi_iso(alg: &FiniteAlgebra, t: Elem, t_prime: Elem) -> Result<SectionMap> {
    let sl = SkewLattice::new(alg)?;
    phi_iso_with(&sl, t, t_prime)
}

pub(crate) fn phi_iso_with(sl: &SkewLattice<'_>, t: Elem, t_prime: Elem) -> Result<SectionMap> {
    let alg = sl.algebra();
    for s in [t, t_prime] {
        if s >= alg.size() || !sl.in_top_class(s) {
            return Err(AlgebraError::domain(format!(
                "{s} is not in the top D-class"
            )));
        }
    }
    let zero = alg.zero().or_else(|| alg.find_bottom());
    let dom = sl.down_set(t).members;
    let cod = sl.down_set(t_prime).members;
    let phi = |x| alg.meet_sandwich(t_prime, x);
    let psi = |y| alg.meet_sandwich(t, y);
    let in_cod = |y| sl.leq(y, t_prime);
    // The codomain carries its own lattice implication; the domain uses the
    // algebra's when it is taken relative to `t`.
    let own = alg.imp_table().filter(|_| alg.top_t() == Some(t));
    let dom_imp = |x, y| match own {
        Some(table) => table.get(x, y),
        None => section_implication(alg, sl, &dom, x, y),
    };
    let cod_imp = |x, y| section_implication(alg, sl, &cod, x, y);

    let mut hit = vec![false; alg.size()];
    let mut bij = None;
    for &x in &dom {
        let y = phi(x);
        if !in_cod(y) || std::mem::replace(&mut hit[y], true) {
            bij = Some(vec![x]);
            break;
        }
    }
    if bij.is_none() && dom.len() != cod.len() {
        bij = cod.iter().find(|&&y| !hit[y]).map(|&y| vec![y]);
    }

    let find2 = |bad: &dyn Fn(Elem, Elem) -> bool| {
        dom.iter()
            .flat_map(|&x| dom.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| bad(x, y))
            .map(|(x, y)| vec![x, y])
    };
    let checks = vec![
        CheckReport::from_witness("φ bijective onto t'↓", bij),
        CheckReport::from_witness(
            "ψ∘φ = id",
            dom.iter().find(|&&x| psi(phi(x)) != x).map(|&x| vec![x]),
        ),
        CheckReport::from_witness(
            "φ∘ψ = id",
            cod.iter().find(|&&y| phi(psi(y)) != y).map(|&y| vec![y]),
        ),
        CheckReport::from_witness(
            "φ preserves ∧",
            find2(&|x, y| phi(alg.meet(x, y)) != alg.meet(phi(x), phi(y))),
        ),
        CheckReport::from_witness(
            "φ preserves ∨",
            find2(&|x, y| phi(alg.join(x, y)) != alg.join(phi(x), phi(y))),
        ),
        CheckReport::from_witness(
            "φ preserves →",
            find2(&|x, y| phi(dom_imp(x, y)) != cod_imp(phi(x), phi(y))),
        ),
        CheckReport::from_witness(
            "φ preserves 0 and top",
            match zero {
                Some(z) if phi(z) != z => Some(vec![z]),
                _ if phi(t) != t_prime => Some(vec![t]),
                _ => None,
            },
        ),
        CheckReport::from_witness(
            "x D φ(x)",
            dom.iter()
                .find(|&&x| !sl.orders().d_related(x, phi(x)))
                .map(|&x| vec![x]),
        ),
    ];
    Ok(SectionMap {
        pairs: dom.iter().map(|&x| (x, phi(x))).collect(),
        checks,
    })
}

/// Largest `z` in `members` with `z∧a ≤ b`, or `a` itself when none exists.
fn section_implication(
    alg: &FiniteAlgebra,
    sl: &SkewLattice<'_>,
    members: &[Elem],
    a: Elem,
    b: Elem,
) -> Elem {
    let fits: Vec<Elem> = members
        .iter()
        .copied()
        .filter(|&z| sl.leq(alg.meet(z, a), b))
        .collect();
    fits.iter()
        .copied()
        .find(|&z| fits.iter().all(|&w| sl.leq(w, z)))
        .unwrap_or(a)
}

/// `t↓` with the restricted operations, as a Heyting lattice, together with
/// a failing report if `t↓` is not closed under `→`.
pub fn section_heyting(sl: &SkewLattice<'_>, t: Elem) -> Result<(HeytingLattice, Vec<Elem>)> {
    let members = sl.down_set(t).members;
    let sub = sl.algebra().restrict_to(&members, true)?;
    Ok((HeytingLattice::from_parts(sub)?, members))
}

/// `S/D` with the implication induced by `→`, after checking exhaustively
/// that `D` is compatible with `→` and that the result is isomorphic to
/// `t↓` as a Heyting algebra.
pub fn quotient_heyting(alg: &FiniteAlgebra) -> Result<HeytingLattice> {
    let sl = SkewLattice::new(alg)?;
    quotient_heyting_with(&sl)
}

pub(crate) fn quotient_heyting_with(sl: &SkewLattice<'_>) -> Result<HeytingLattice> {
    let alg = sl.algebra();
    let cand = NcHeytingCandidate::new(alg)?;
    let t = cand.t();
    let p = sl.partition();
    let k = p.len();
    let mut rows = vec![vec![usize::MAX; k]; k];
    for x in alg.elements() {
        for y in alg.elements() {
            let (cx, cy) = (p.class_of(x), p.class_of(y));
            let v = p.class_of(alg.imp(x, y).unwrap());
            let cell = &mut rows[cx][cy];
            if *cell == usize::MAX {
                *cell = v;
            } else if *cell != v {
                let (u, w) = (p.class(cx)[0], p.class(cy)[0]);
                return Err(AlgebraError::inconsistent(
                    "D is not compatible with →",
                    vec![x, y, u, w],
                ));
            }
        }
    }
    let quotient = p.quotient().clone().with_imp(Table::from_rows(&rows)?)?;
    let lat = HeytingLattice::from_parts(quotient)?;
    if !sl.in_top_class(t) {
        return Err(AlgebraError::domain(format!(
            "{t} is not in the top D-class"
        )));
    }
    let embed: Vec<Elem> = (0..k)
        .map(|c| unique_below(sl, p.class(c), t))
        .collect::<Result<_>>()?;
    let q = lat.algebra();
    for c in 0..k {
        for d in 0..k {
            let ok = embed[q.meet(c, d)] == alg.meet(embed[c], embed[d])
                && embed[q.join(c, d)] == alg.join(embed[c], embed[d])
                && embed[lat.imp(c, d)] == alg.imp(embed[c], embed[d]).unwrap();
            if !ok {
                return Err(AlgebraError::inconsistent(
                    "S/D is not isomorphic to t↓",
                    vec![embed[c], embed[d]],
                ));
            }
        }
    }
    Ok(lat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{boolean_lattice, build_pfn_algebra, chain};

    #[test]
    fn boolean_chain_implication() {
        let c = chain(2).unwrap();
        assert_eq!(heyting_implication(&c, 1, 0).unwrap(), 0);
        assert_eq!(heyting_implication(&c, 0, 1).unwrap(), 1);
        assert_eq!(heyting_implication(&c, 0, 0).unwrap(), 1);
    }

    #[test]
    fn non_lattice_rejected() {
        let p = build_pfn_algebra(1).unwrap();
        assert!(heyting_implication(&p, 0, 0).is_err());
    }

    #[test]
    fn pfn1_implication_t_matches_example() {
        let p = build_pfn_algebra(1).unwrap();
        let table = implication_t(&p, 2).unwrap();
        assert_eq!(&table, p.imp_table().unwrap());
        assert_eq!(table.get(1, 0), 0);
        assert_eq!(table.get(0, 1), 1);
        assert_eq!(table.get(0, 0), 2);
    }

    #[test]
    fn implication_t_rejects_bottom_as_t() {
        let p = build_pfn_algebra(1).unwrap();
        assert!(matches!(implication_t(&p, 0), Err(AlgebraError::Domain(_))));
    }

    #[test]
    fn corrupted_nh2_is_caught() {
        let p = build_pfn_algebra(1).unwrap();
        let mut imp = p.imp_table().unwrap().clone();
        imp.set(0, 0, 0);
        let bad = p.clone().with_imp(imp).unwrap();
        let reports = verify_nh(&NcHeytingCandidate::new(&bad).unwrap());
        let nh2 = reports.iter().find(|r| r.name.starts_with("NH2")).unwrap();
        assert_eq!(nh2.witness, Some(vec![0]));
    }

    #[test]
    fn boolean_lattice_heyting_axioms() {
        let h = HeytingLattice::from_lattice(&boolean_lattice(2).unwrap()).unwrap();
        assert!(h.check_axioms().iter().all(|r| r.passed));
        // a → b = ¬a ∨ b
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(h.imp(a, b), (!a & 3) | b);
            }
        }
    }

    #[test]
    fn phi_identity_and_swap() {
        let p = build_pfn_algebra(1).unwrap();
        let id = phi_iso(&p, 2, 2).unwrap();
        assert!(id.pairs.iter().all(|&(x, y)| x == y));
        let swap = phi_iso(&p, 2, 1).unwrap();
        assert_eq!(swap.pairs, vec![(0, 0), (2, 1)]);
        assert!(swap.checks.iter().all(|c| c.passed), "{:?}", swap.checks);
    }

    #[test]
    fn sup_formula_on_pfn1() {
        let p = build_pfn_algebra(1).unwrap();
        assert_eq!(implication_via_sup(&p, 2, 0, 0).unwrap(), 2);
        for a in 0..3 {
            assert_eq!(implication_via_sup(&p, 2, a, 2).unwrap(), 2);
        }
    }
}
