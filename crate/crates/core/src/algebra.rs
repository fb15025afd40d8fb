//! Finite double bands stored as operation tables.
//!
//! Elements are the dense indices `0..size`; every operation is a row-major
//! `size x size` table where row `x`, column `y` holds `op(x, y)`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{AlgebraError, Result};
use crate::report::CheckReport;

/// Element index into a [`FiniteAlgebra`].
pub type Elem = usize;

/// A total binary operation on `0..size`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table {
    size: usize,
    cells: Vec<Elem>,
}

impl Table {
    pub fn from_fn(size: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                cells.push(f(x, y));
            }
        }
        Table { size, cells }
    }

    /// Builds a table from rows, rejecting ragged input and out-of-range entries.
    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Self> {
        let size = rows.len();
        let mut cells = Vec::with_capacity(size * size);
        for (x, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(AlgebraError::Structural(format!(
                    "row {x} has {} entries, expected {size}",
                    row.len()
                )));
            }
            cells.extend_from_slice(row);
        }
        let table = Table { size, cells };
        table.check_range()?;
        Ok(table)
    }

    fn check_range(&self) -> Result<()> {
        if self.cells.len() != self.size * self.size {
            return Err(AlgebraError::Structural(format!(
                "table has {} cells, expected {}",
                self.cells.len(),
                self.size * self.size
            )));
        }
        if let Some(pos) = self.cells.iter().position(|&v| v >= self.size) {
            return Err(AlgebraError::Structural(format!(
                "entry at row {}, column {} is {}, outside 0..{}",
                pos / self.size,
                pos % self.size,
                self.cells[pos],
                self.size
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.cells[x * self.size + y]
    }

    pub fn set(&mut self, x: Elem, y: Elem, value: Elem) {
        self.cells[x * self.size + y] = value;
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cells(&self) -> &[Elem] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.cells.chunks(self.size.max(1)).take(self.size)
    }

    /// `op'(x, y) = op(y, x)`.
    pub fn transposed(&self) -> Table {
        Table::from_fn(self.size, |x, y| self.get(y, x))
    }

    /// First cell where the two tables differ.
    pub fn first_difference(&self, other: &Table) -> Option<(Elem, Elem)> {
        if self.size != other.size {
            return Some((0, 0));
        }
        self.cells
            .iter()
            .zip(&other.cells)
            .position(|(a, b)| a != b)
            .map(|pos| (pos / self.size, pos % self.size))
    }
}

/// Carrier `0..size` with meet and join tables, an optional implication,
/// an optional bottom `zero` and an optional distinguished top-class element `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebra {
    size: usize,
    meet: Table,
    join: Table,
    imp: Option<Table>,
    zero: Option<Elem>,
    top_t: Option<Elem>,
}

impl FiniteAlgebra {
    pub fn new(meet: Table, join: Table) -> Result<Self> {
        let size = meet.size();
        if size == 0 {
            return Err(AlgebraError::Structural("carrier must be nonempty".into()));
        }
        if join.size() != size {
            return Err(AlgebraError::Structural(format!(
                "join table has size {}, meet has {size}",
                join.size()
            )));
        }
        meet.check_range()?;
        join.check_range()?;
        Ok(FiniteAlgebra {
            size,
            meet,
            join,
            imp: None,
            zero: None,
            top_t: None,
        })
    }

    pub fn from_fns(
        size: usize,
        meet: impl FnMut(Elem, Elem) -> Elem,
        join: impl FnMut(Elem, Elem) -> Elem,
    ) -> Result<Self> {
        FiniteAlgebra::new(Table::from_fn(size, meet), Table::from_fn(size, join))
    }

    pub fn with_imp(mut self, imp: Table) -> Result<Self> {
        if imp.size() != self.size {
            return Err(AlgebraError::Structural(format!(
                "implication table has size {}, carrier has {}",
                imp.size(),
                self.size
            )));
        }
        imp.check_range()?;
        self.imp = Some(imp);
        Ok(self)
    }

    pub fn with_zero(mut self, zero: Elem) -> Result<Self> {
        self.check_elem(zero, "zero")?;
        self.zero = Some(zero);
        Ok(self)
    }

    pub fn with_top(mut self, t: Elem) -> Result<Self> {
        self.check_elem(t, "top")?;
        self.top_t = Some(t);
        Ok(self)
    }

    pub fn without_imp(mut self) -> Self {
        self.imp = None;
        self.top_t = None;
        self
    }

    fn check_elem(&self, x: Elem, what: &str) -> Result<()> {
        if x >= self.size {
            return Err(AlgebraError::Structural(format!(
                "{what} index {x} outside 0..{}",
                self.size
            )));
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet.get(x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join.get(x, y)
    }

    /// `x ∧ y ∧ x`
    #[inline]
    pub fn meet_sandwich(&self, x: Elem, y: Elem) -> Elem {
        self.meet(self.meet(x, y), x)
    }

    /// `x ∨ y ∨ x`
    #[inline]
    pub fn join_sandwich(&self, x: Elem, y: Elem) -> Elem {
        self.join(self.join(x, y), x)
    }

    pub fn imp(&self, x: Elem, y: Elem) -> Option<Elem> {
        self.imp.as_ref().map(|t| t.get(x, y))
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn imp_table(&self) -> Option<&Table> {
        self.imp.as_ref()
    }

    pub fn zero(&self) -> Option<Elem> {
        self.zero
    }

    pub fn top_t(&self) -> Option<Elem> {
        self.top_t
    }

    #[inline]
    pub fn commutes(&self, x: Elem, y: Elem) -> bool {
        self.meet(x, y) == self.meet(y, x)
    }

    pub fn is_meet_commutative(&self) -> bool {
        is_commutative(&self.meet)
    }

    pub fn is_join_commutative(&self) -> bool {
        is_commutative(&self.join)
    }

    pub fn is_commutative(&self) -> bool {
        self.is_meet_commutative() && self.is_join_commutative()
    }

    /// An element `z` with `z ∧ x = z = x ∧ z` for every `x`.
    pub fn find_bottom(&self) -> Option<Elem> {
        self.elements().find(|&z| {
            self.elements()
                .all(|x| self.meet(z, x) == z && self.meet(x, z) == z)
        })
    }

    /// An element acting as a two-sided top: `1 ∧ x = x = x ∧ 1` and `1 ∨ x = 1 = x ∨ 1`.
    pub fn find_two_sided_top(&self) -> Option<Elem> {
        self.elements().find(|&one| {
            self.elements().all(|x| {
                self.meet(one, x) == x
                    && self.meet(x, one) == x
                    && self.join(one, x) == one
                    && self.join(x, one) == one
            })
        })
    }

    /// The mirror algebra with both operations' argument roles swapped.
    pub fn mirrored(&self) -> FiniteAlgebra {
        FiniteAlgebra {
            size: self.size,
            meet: self.meet.transposed(),
            join: self.join.transposed(),
            imp: None,
            zero: self.zero,
            top_t: None,
        }
    }

    /// Size followed by the row-major meet, join and implication tables;
    /// a missing implication is encoded by a single `usize::MAX` sentinel.
    pub fn canonical_key(&self) -> Vec<usize> {
        let mut key = Vec::with_capacity(1 + 3 * self.size * self.size);
        key.push(self.size);
        key.extend_from_slice(self.meet.cells());
        key.extend_from_slice(self.join.cells());
        match &self.imp {
            Some(imp) => key.extend_from_slice(imp.cells()),
            None => key.push(usize::MAX),
        }
        key
    }

    pub fn canonical_hash(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.canonical_key().hash(&mut h);
        h.finish()
    }

    /// The subalgebra on `members` (sorted, deduplicated), re-indexed densely.
    ///
    /// Fails unless `members` is closed under meet and join, and under the
    /// implication too when `keep_imp` is set and an implication exists.
    /// Zero and `t` survive only if they are members; otherwise zero is
    /// recomputed as the subalgebra's own bottom when it has one.
    pub fn restrict_to(&self, members: &[Elem], keep_imp: bool) -> Result<FiniteAlgebra> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.is_empty() {
            return Err(AlgebraError::domain("subalgebra must be nonempty"));
        }
        let mut index = vec![usize::MAX; self.size];
        for (i, &m) in members.iter().enumerate() {
            self.check_elem(m, "member")?;
            index[m] = i;
        }
        let k = members.len();
        let sub_table = |table: &Table, what: &str| -> Result<Table> {
            let mut cells = Vec::with_capacity(k * k);
            for &x in &members {
                for &y in &members {
                    let v = index[table.get(x, y)];
                    if v == usize::MAX {
                        return Err(AlgebraError::domain(format!(
                            "subset not closed under {what}: ({x},{y})"
                        )));
                    }
                    cells.push(v);
                }
            }
            Ok(Table { size: k, cells })
        };
        let mut sub = FiniteAlgebra::new(
            sub_table(&self.meet, "meet")?,
            sub_table(&self.join, "join")?,
        )?;
        if keep_imp {
            if let Some(imp) = &self.imp {
                sub.imp = Some(sub_table(imp, "implication")?);
                sub.top_t = self.top_t.map(|t| index[t]).filter(|&t| t != usize::MAX);
            }
        }
        sub.zero = match self.zero.map(|z| index[z]) {
            Some(z) if z != usize::MAX => Some(z),
            _ => sub.find_bottom(),
        };
        Ok(sub)
    }
}

pub(crate) fn is_commutative(table: &Table) -> bool {
    let n = table.size();
    (0..n).all(|x| (x + 1..n).all(|y| table.get(x, y) == table.get(y, x)))
}

fn first_pair(n: usize, mut bad: impl FnMut(Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for x in 0..n {
        for y in 0..n {
            if bad(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

fn first_triple(n: usize, mut bad: impl FnMut(Elem, Elem, Elem) -> bool) -> Option<Vec<Elem>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if bad(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

pub(crate) fn pair_report(
    name: &str,
    n: usize,
    bad: impl FnMut(Elem, Elem) -> bool,
) -> CheckReport {
    CheckReport::from_witness(name, first_pair(n, bad))
}

pub(crate) fn triple_report(
    name: &str,
    n: usize,
    bad: impl FnMut(Elem, Elem, Elem) -> bool,
) -> CheckReport {
    CheckReport::from_witness(name, first_triple(n, bad))
}

/// Checks the skew lattice axioms: idempotency and associativity of both
/// operations and the four absorption identities. When the algebra carries a
/// zero or a distinguished `t`, their defining laws are reported as well.
pub fn validate_skew_lattice(alg: &FiniteAlgebra) -> Vec<CheckReport> {
    let n = alg.size();
    let mut reports = vec![
        CheckReport::from_witness(
            "meet idempotent",
            alg.elements()
                .find(|&x| alg.meet(x, x) != x)
                .map(|x| vec![x]),
        ),
        CheckReport::from_witness(
            "join idempotent",
            alg.elements()
                .find(|&x| alg.join(x, x) != x)
                .map(|x| vec![x]),
        ),
        triple_report("meet associative", n, |x, y, z| {
            alg.meet(alg.meet(x, y), z) != alg.meet(x, alg.meet(y, z))
        }),
        triple_report("join associative", n, |x, y, z| {
            alg.join(alg.join(x, y), z) != alg.join(x, alg.join(y, z))
        }),
        pair_report("x∧(x∨y)=x", n, |x, y| alg.meet(x, alg.join(x, y)) != x),
        pair_report("x∨(x∧y)=x", n, |x, y| alg.join(x, alg.meet(x, y)) != x),
        pair_report("(x∧y)∨y=y", n, |x, y| alg.join(alg.meet(x, y), y) != y),
        pair_report("(x∨y)∧y=y", n, |x, y| alg.meet(alg.join(x, y), y) != y),
    ];
    if let Some(z) = alg.zero() {
        reports.push(CheckReport::from_witness(
            "zero is bottom",
            alg.elements()
                .find(|&x| alg.meet(x, z) != z || alg.meet(z, x) != z)
                .map(|x| vec![x]),
        ));
    }
    if let Some(t) = alg.top_t() {
        reports.push(CheckReport::from_witness(
            "t in top class",
            alg.elements()
                .find(|&x| alg.meet_sandwich(x, t) != x)
                .map(|x| vec![x]),
        ));
    }
    reports
}

/// Natural partial order `≤` and natural preorder `≼` as boolean matrices,
/// plus cached upper sets of `≤` for supremum searches.
#[derive(Debug, Clone)]
pub struct OrderRelations {
    size: usize,
    leq: Vec<bool>,
    preceq: Vec<bool>,
    up: Vec<FixedBitSet>,
}

impl OrderRelations {
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.leq[x * self.size + y]
    }

    #[inline]
    pub fn preceq(&self, x: Elem, y: Elem) -> bool {
        self.preceq[x * self.size + y]
    }

    #[inline]
    pub fn d_related(&self, x: Elem, y: Elem) -> bool {
        self.preceq(x, y) && self.preceq(y, x)
    }

    /// `{ y | x ≤ y }`
    pub fn upper_set(&self, x: Elem) -> &FixedBitSet {
        &self.up[x]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Least upper bound of `set` under `≤`, found by intersecting upper
    /// sets and then scanning for a bound below all the others.
    pub fn supremum(&self, set: &[Elem]) -> Option<Elem> {
        let mut bounds = FixedBitSet::with_capacity(self.size);
        bounds.insert_range(..);
        for &x in set {
            bounds.intersect_with(&self.up[x]);
        }
        self.least_of(&bounds)
    }

    /// The element of `bounds` lying below every other member, if any.
    pub fn least_of(&self, bounds: &FixedBitSet) -> Option<Elem> {
        bounds.ones().find(|&u| bounds.is_subset(&self.up[u]))
    }
}

/// Computes `≤` and `≼`, cross-checking every characterization the two
/// orders have in a skew lattice. Any disagreement means the input was not
/// a skew lattice.
pub fn compute_orders(alg: &FiniteAlgebra) -> Result<OrderRelations> {
    let n = alg.size();
    let mut leq = vec![false; n * n];
    let mut preceq = vec![false; n * n];
    for x in 0..n {
        for y in 0..n {
            let by_meet = alg.meet(x, y) == x && alg.meet(y, x) == x;
            let by_join = alg.join(x, y) == y && alg.join(y, x) == y;
            if by_meet != by_join {
                return Err(AlgebraError::inconsistent(
                    "meet and join characterizations of ≤ disagree",
                    vec![x, y],
                ));
            }
            if (alg.meet(x, y) == x) != (alg.join(x, y) == y)
                || (alg.meet(x, y) == y) != (alg.join(x, y) == x)
            {
                return Err(AlgebraError::inconsistent(
                    "x∧y=x ⇔ x∨y=y fails",
                    vec![x, y],
                ));
            }
            let pre = alg.meet_sandwich(x, y) == x;
            if pre != (alg.join_sandwich(y, x) == y) {
                return Err(AlgebraError::inconsistent(
                    "meet and join characterizations of ≼ disagree",
                    vec![x, y],
                ));
            }
            leq[x * n + y] = by_meet;
            preceq[x * n + y] = pre;
        }
    }
    for x in 0..n {
        if !leq[x * n + x] || !preceq[x * n + x] {
            return Err(AlgebraError::inconsistent("order not reflexive", vec![x]));
        }
        for y in 0..n {
            if x != y && leq[x * n + y] && leq[y * n + x] {
                return Err(AlgebraError::inconsistent(
                    "≤ not antisymmetric",
                    vec![x, y],
                ));
            }
            if leq[x * n + y] && !preceq[x * n + y] {
                return Err(AlgebraError::inconsistent(
                    "≤ not contained in ≼",
                    vec![x, y],
                ));
            }
            if !preceq[x * n + y] {
                continue;
            }
            for z in 0..n {
                if preceq[y * n + z] && !preceq[x * n + z] {
                    return Err(AlgebraError::inconsistent(
                        "≼ not transitive",
                        vec![x, y, z],
                    ));
                }
            }
        }
    }
    let up = (0..n)
        .map(|x| {
            let mut set = FixedBitSet::with_capacity(n);
            for y in 0..n {
                if leq[x * n + y] {
                    set.insert(y);
                }
            }
            set
        })
        .collect();
    Ok(OrderRelations {
        size: n,
        leq,
        preceq,
        up,
    })
}

/// Green's relation `D` and the maximal lattice image `S/D`.
///
/// Class ids follow the smallest member index, so class 0 contains element 0.
#[derive(Debug, Clone)]
pub struct DClassPartition {
    class_of: Vec<usize>,
    classes: Vec<Vec<Elem>>,
    quotient: FiniteAlgebra,
}

impl DClassPartition {
    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn class(&self, id: usize) -> &[Elem] {
        &self.classes[id]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The commutative lattice on class ids; `zero` and `top_t` hold its bounds.
    pub fn quotient(&self) -> &FiniteAlgebra {
        &self.quotient
    }

    /// Id of the class mapped to the quotient's top.
    pub fn top_class_id(&self) -> usize {
        self.quotient
            .top_t()
            .expect("finite lattice quotient always has a top")
    }

    /// `D_a ≥ D_b` in the quotient order.
    pub fn class_above(&self, a: usize, b: usize) -> bool {
        self.quotient.meet(a, b) == b
    }
}

pub fn d_partition(alg: &FiniteAlgebra) -> Result<DClassPartition> {
    let orders = compute_orders(alg)?;
    d_partition_with(alg, &orders)
}

pub(crate) fn d_partition_with(
    alg: &FiniteAlgebra,
    orders: &OrderRelations,
) -> Result<DClassPartition> {
    let n = alg.size();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<Elem>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let members: Vec<Elem> = (x..n).filter(|&y| orders.d_related(x, y)).collect();
        for &m in &members {
            class_of[m] = id;
        }
        classes.push(members);
    }
    for members in &classes {
        for &x in members {
            for &y in members {
                if alg.meet(x, y) != alg.join(y, x) {
                    return Err(AlgebraError::inconsistent(
                        "D-class is not rectangular",
                        vec![x, y],
                    ));
                }
            }
        }
    }
    let k = classes.len();
    let mut qmeet = Table::from_fn(k, |_, _| usize::MAX);
    let mut qjoin = Table::from_fn(k, |_, _| usize::MAX);
    for x in 0..n {
        for y in 0..n {
            let (cx, cy) = (class_of[x], class_of[y]);
            for (table, value) in [
                (&mut qmeet, class_of[alg.meet(x, y)]),
                (&mut qjoin, class_of[alg.join(x, y)]),
            ] {
                let cell = table.get(cx, cy);
                if cell == usize::MAX {
                    table.set(cx, cy, value);
                } else if cell != value {
                    return Err(AlgebraError::inconsistent(
                        "D is not a congruence",
                        vec![x, y],
                    ));
                }
            }
        }
    }
    if !is_commutative(&qmeet) || !is_commutative(&qjoin) {
        return Err(AlgebraError::inconsistent(
            "S/D is not commutative",
            Vec::new(),
        ));
    }
    let mut quotient = FiniteAlgebra::new(qmeet, qjoin)?;
    let bottom = quotient.find_bottom();
    quotient.zero = bottom;
    quotient.top_t = (0..k).find(|&c| (0..k).all(|d| quotient.join(c, d) == c));
    if quotient.top_t.is_none() || bottom.is_none() {
        return Err(AlgebraError::inconsistent(
            "S/D is not a bounded lattice",
            Vec::new(),
        ));
    }
    Ok(DClassPartition {
        class_of,
        classes,
        quotient,
    })
}

/// `u↓ = { x | x ≤ u }` together with a report on whether the restricted
/// operations commute there.
#[derive(Debug, Clone)]
pub struct DownSet {
    pub members: Vec<Elem>,
    pub lattice: CheckReport,
}

pub(crate) fn down_set_with(alg: &FiniteAlgebra, orders: &OrderRelations, u: Elem) -> DownSet {
    let members: Vec<Elem> = alg.elements().filter(|&x| orders.leq(x, u)).collect();
    let mut witness = None;
    'outer: for &x in &members {
        for &y in &members {
            if alg.meet(x, y) != alg.meet(y, x) || alg.join(x, y) != alg.join(y, x) {
                witness = Some(vec![u, x, y]);
                break 'outer;
            }
        }
    }
    DownSet {
        members,
        lattice: CheckReport::from_witness("down-set is a lattice", witness),
    }
}

pub fn down_set(alg: &FiniteAlgebra, u: Elem) -> Result<DownSet> {
    if u >= alg.size() {
        return Err(AlgebraError::domain(format!("element {u} out of range")));
    }
    let orders = compute_orders(alg)?;
    Ok(down_set_with(alg, &orders, u))
}

/// A validated skew lattice together with its orders and `D`-partition.
///
/// Most checks need all three; building them once keeps repeated queries cheap.
#[derive(Debug, Clone)]
pub struct SkewLattice<'a> {
    alg: &'a FiniteAlgebra,
    orders: OrderRelations,
    partition: DClassPartition,
}

impl<'a> SkewLattice<'a> {
    pub fn new(alg: &'a FiniteAlgebra) -> Result<Self> {
        let reports = validate_skew_lattice(alg);
        if let Some(bad) = reports.iter().find(|r| !r.passed) {
            return Err(AlgebraError::domain(format!("not a skew lattice: {bad}")));
        }
        let orders = compute_orders(alg)?;
        let partition = d_partition_with(alg, &orders)?;
        Ok(SkewLattice {
            alg,
            orders,
            partition,
        })
    }

    pub fn algebra(&self) -> &'a FiniteAlgebra {
        self.alg
    }

    pub fn orders(&self) -> &OrderRelations {
        &self.orders
    }

    pub fn partition(&self) -> &DClassPartition {
        &self.partition
    }

    pub fn down_set(&self, u: Elem) -> DownSet {
        down_set_with(self.alg, &self.orders, u)
    }

    /// Members of the top `D`-class.
    pub fn top_class(&self) -> &[Elem] {
        self.partition.class(self.partition.top_class_id())
    }

    pub fn in_top_class(&self, t: Elem) -> bool {
        self.partition.class_of(t) == self.partition.top_class_id()
    }

    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.orders.leq(x, y)
    }

    pub fn supremum(&self, set: &[Elem]) -> Option<Elem> {
        self.orders.supremum(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> FiniteAlgebra {
        FiniteAlgebra::from_fns(2, |x, y| x.min(y), |x, y| x.max(y)).unwrap()
    }

    #[test]
    fn out_of_range_entry_is_structural() {
        let err = Table::from_rows(&[vec![0, 2], vec![0, 1]]).unwrap_err();
        assert!(matches!(err, AlgebraError::Structural(_)));
        let meet = Table::from_fn(2, |_, _| 0);
        let bad = Table {
            size: 2,
            cells: vec![0, 1, 5, 1],
        };
        assert!(FiniteAlgebra::new(meet, bad).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Table::from_rows(&[vec![0, 1], vec![0]]).is_err());
    }

    #[test]
    fn failing_absorption_reports_first_witness() {
        // meet = min, join(x,y) = x: a left-zero band that is not absorptive.
        let alg = FiniteAlgebra::new(
            Table::from_rows(&[vec![0, 0], vec![0, 1]]).unwrap(),
            Table::from_rows(&[vec![0, 0], vec![1, 1]]).unwrap(),
        )
        .unwrap();
        let reports = validate_skew_lattice(&alg);
        let r = reports.iter().find(|r| r.name == "(x∨y)∧y=y").unwrap();
        assert_eq!(r.witness, Some(vec![0, 1]));
        // (0∨1)∧1 = 0∧1 = 0 ≠ 1
        assert_eq!(alg.meet(alg.join(0, 1), 1), 0);
        assert!(reports
            .iter()
            .filter(|r| r.name.contains("associative"))
            .all(|r| r.passed));
    }

    #[test]
    fn chain_orders_and_partition() {
        let alg = chain2();
        assert!(validate_skew_lattice(&alg).iter().all(|r| r.passed));
        let o = compute_orders(&alg).unwrap();
        assert!(o.leq(0, 1) && !o.leq(1, 0) && o.leq(1, 1));
        let p = d_partition(&alg).unwrap();
        assert_eq!(p.classes(), &[vec![0], vec![1]]);
        assert_eq!(p.top_class_id(), 1);
    }

    #[test]
    fn restrict_requires_closure() {
        let alg = FiniteAlgebra::from_fns(3, |x, y| x.min(y), |x, y| x.max(y)).unwrap();
        let sub = alg.restrict_to(&[2, 0], false).unwrap();
        assert_eq!(sub.size(), 2);
        assert_eq!(sub.zero(), Some(0));
        assert_eq!(sub.join(0, 1), 1);
        let rect = FiniteAlgebra::from_fns(2, |x, _| x, |_, y| y).unwrap();
        assert!(rect.restrict_to(&[0, 1], false).is_ok());
    }

    #[test]
    fn supremum_scan() {
        let alg = FiniteAlgebra::from_fns(4, |x, y| x & y, |x, y| x | y).unwrap();
        let o = compute_orders(&alg).unwrap();
        assert_eq!(o.supremum(&[1, 2]), Some(3));
        assert_eq!(o.supremum(&[]), Some(0));
        assert_eq!(o.supremum(&[2]), Some(2));
    }
}
