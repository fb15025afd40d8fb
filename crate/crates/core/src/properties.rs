//! Classifying predicates on skew lattices, commuting subsets and suprema.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::algebra::{pair_report, triple_report, Elem, FiniteAlgebra, SkewLattice};
use crate::error::{AlgebraError, Result};
use crate::report::CheckReport;

/// `x∧y = y∧x` iff `x∨y = y∨x`, for every pair.
pub fn is_symmetric(alg: &FiniteAlgebra) -> CheckReport {
    pair_report("symmetric", alg.size(), |x, y| {
        (alg.meet(x, y) == alg.meet(y, x)) != (alg.join(x, y) == alg.join(y, x))
    })
}

/// `x∧y∧z∧x = x∧z∧y∧x`, exhaustively over quadruples (the identity has three
/// distinct variables, so the witness is `(x, y, z)`).
pub fn is_normal(alg: &FiniteAlgebra) -> CheckReport {
    triple_report("normal", alg.size(), |x, y, z| {
        alg.meet(alg.meet(alg.meet(x, y), z), x) != alg.meet(alg.meet(alg.meet(x, z), y), x)
    })
}

/// `(x∨y)∧z = (x∧z)∨(y∧z)` and `x∧(y∨z) = (x∧y)∨(x∧z)`.
pub fn is_strongly_distributive(alg: &FiniteAlgebra) -> CheckReport {
    triple_report("strongly distributive", alg.size(), |x, y, z| {
        alg.meet(alg.join(x, y), z) != alg.join(alg.meet(x, z), alg.meet(y, z))
            || alg.meet(x, alg.join(y, z)) != alg.join(alg.meet(x, y), alg.meet(x, z))
    })
}

/// `x∧(y∨z)∧x = (x∧y∧x)∨(x∧z∧x)` and `x∨(y∧z)∨x = (x∨y∨x)∧(x∨z∨x)`.
pub fn is_distributive(alg: &FiniteAlgebra) -> CheckReport {
    triple_report("distributive", alg.size(), |x, y, z| {
        alg.meet_sandwich(x, alg.join(y, z))
            != alg.join(alg.meet_sandwich(x, y), alg.meet_sandwich(x, z))
            || alg.join_sandwich(x, alg.meet(y, z))
                != alg.meet(alg.join_sandwich(x, y), alg.join_sandwich(x, z))
    })
}

/// `x∧y∧x∧z∧x = x∧y∧z∧x` and the dual for `∨`.
pub fn is_regular(alg: &FiniteAlgebra) -> CheckReport {
    triple_report("regular", alg.size(), |x, y, z| {
        let m = |a, b| alg.meet(a, b);
        let j = |a, b| alg.join(a, b);
        m(m(m(m(x, y), x), z), x) != m(m(m(x, y), z), x)
            || j(j(j(j(x, y), x), z), x) != j(j(j(x, y), z), x)
    })
}

/// Every pair satisfies `x∧y = y∨x`: a single `D`-class.
pub fn is_rectangular(alg: &FiniteAlgebra) -> CheckReport {
    pair_report("rectangular", alg.size(), |x, y| {
        alg.meet(x, y) != alg.join(y, x)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Handedness {
    Left,
    Right,
    /// Both identities hold, which forces `∧` to commute.
    Both,
    Neither,
}

impl fmt::Display for Handedness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Handedness::Left => "left-handed",
            Handedness::Right => "right-handed",
            Handedness::Both => "commutative",
            Handedness::Neither => "neither-handed",
        })
    }
}

/// Left: `x∧y∧x = x∧y`. Right: `x∧y∧x = y∧x`.
pub fn handedness(alg: &FiniteAlgebra) -> Handedness {
    let pairs = || {
        alg.elements()
            .flat_map(|x| alg.elements().map(move |y| (x, y)))
    };
    let left = pairs().all(|(x, y)| alg.meet_sandwich(x, y) == alg.meet(x, y));
    let right = pairs().all(|(x, y)| alg.meet_sandwich(x, y) == alg.meet(y, x));
    match (left, right) {
        (true, true) => Handedness::Both,
        (true, false) => Handedness::Left,
        (false, true) => Handedness::Right,
        (false, false) => Handedness::Neither,
    }
}

/// Members of the top `D`-class, or `None` if `alg` is not a skew lattice.
pub fn top_class(alg: &FiniteAlgebra) -> Option<Vec<Elem>> {
    SkewLattice::new(alg).ok().map(|sl| sl.top_class().to_vec())
}

/// `t↓` for `t` in the top class, with the check that it is commutative and
/// meets every `D`-class exactly once.
#[derive(Debug, Clone)]
pub struct LatticeSection {
    pub members: Vec<Elem>,
    pub check: CheckReport,
}

pub fn lattice_section_at(sl: &SkewLattice<'_>, t: Elem) -> Result<LatticeSection> {
    if t >= sl.algebra().size() || !sl.in_top_class(t) {
        return Err(AlgebraError::domain(format!(
            "{t} is not in the top D-class"
        )));
    }
    let down = sl.down_set(t);
    let partition = sl.partition();
    let mut hits = vec![0usize; partition.len()];
    for &x in &down.members {
        hits[partition.class_of(x)] += 1;
    }
    let check = if !down.lattice.passed {
        down.lattice.renamed("lattice section")
    } else if let Some(c) = hits.iter().position(|&h| h != 1) {
        CheckReport::fail("lattice section", vec![t, partition.class(c)[0]])
    } else {
        CheckReport::pass("lattice section")
    };
    Ok(LatticeSection {
        members: down.members,
        check,
    })
}

/// A pairwise-commuting set of elements and its supremum under `≤`, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutingSubset {
    pub members: Vec<Elem>,
    pub supremum: Option<Elem>,
}

/// Depth-first enumeration of every commuting subset of at most `max_size`
/// members, in lexicographic order of sorted member lists, starting with the
/// empty set. The count is exponential in the worst case.
pub struct CommutingSubsets<'s, 'a> {
    sl: &'s SkewLattice<'a>,
    max_size: usize,
    members: Vec<Elem>,
    bounds: Vec<FixedBitSet>,
    cursor: Elem,
    started: bool,
}

impl<'s, 'a> CommutingSubsets<'s, 'a> {
    pub fn new(sl: &'s SkewLattice<'a>, max_size: Option<usize>) -> Self {
        let n = sl.algebra().size();
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        CommutingSubsets {
            sl,
            max_size: max_size.unwrap_or(n),
            members: Vec::new(),
            bounds: vec![all],
            cursor: 0,
            started: false,
        }
    }

    fn current(&self) -> CommutingSubset {
        let bounds = self.bounds.last().expect("bounds stack never empty");
        CommutingSubset {
            members: self.members.clone(),
            supremum: self.sl.orders().least_of(bounds),
        }
    }
}

impl Iterator for CommutingSubsets<'_, '_> {
    type Item = CommutingSubset;

    fn next(&mut self) -> Option<CommutingSubset> {
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        let alg = self.sl.algebra();
        let n = alg.size();
        loop {
            if self.members.len() < self.max_size {
                let next =
                    (self.cursor..n).find(|&c| self.members.iter().all(|&m| alg.commutes(m, c)));
                if let Some(c) = next {
                    let mut bounds = self.bounds.last().unwrap().clone();
                    bounds.intersect_with(self.sl.orders().upper_set(c));
                    self.members.push(c);
                    self.bounds.push(bounds);
                    self.cursor = c + 1;
                    return Some(self.current());
                }
            }
            let last = self.members.pop()?;
            self.bounds.pop();
            self.cursor = last + 1;
        }
    }
}

pub fn commuting_subsets<'s, 'a>(
    sl: &'s SkewLattice<'a>,
    max_size: Option<usize>,
) -> CommutingSubsets<'s, 'a> {
    CommutingSubsets::new(sl, max_size)
}

/// Every commuting subset (up to `cap` members) has a supremum; the witness
/// is the first subset without one.
pub fn is_join_complete(sl: &SkewLattice<'_>, cap: Option<usize>) -> CheckReport {
    let witness = commuting_subsets(sl, cap)
        .find(|s| s.supremum.is_none())
        .map(|s| s.members);
    CheckReport::from_witness("join complete", witness)
}

/// Named flags for one algebra, each reproducible from its predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyProfile {
    pub symmetric: bool,
    pub normal: bool,
    pub regular: bool,
    pub left_handed: bool,
    pub right_handed: bool,
    pub strongly_distributive: bool,
    pub distributive: bool,
    pub rectangular: bool,
    pub has_zero: bool,
    pub has_top_class: bool,
    pub join_complete: bool,
}

impl PropertyProfile {
    pub fn compute(sl: &SkewLattice<'_>, cap: Option<usize>) -> Self {
        let alg = sl.algebra();
        let hand = handedness(alg);
        PropertyProfile {
            symmetric: is_symmetric(alg).passed,
            normal: is_normal(alg).passed,
            regular: is_regular(alg).passed,
            left_handed: matches!(hand, Handedness::Left | Handedness::Both),
            right_handed: matches!(hand, Handedness::Right | Handedness::Both),
            strongly_distributive: is_strongly_distributive(alg).passed,
            distributive: is_distributive(alg).passed,
            rectangular: is_rectangular(alg).passed,
            has_zero: alg.find_bottom().is_some(),
            has_top_class: !sl.top_class().is_empty(),
            join_complete: is_join_complete(sl, cap).passed,
        }
    }

    pub fn flags(&self) -> [(&'static str, bool); 11] {
        [
            ("symmetric", self.symmetric),
            ("normal", self.normal),
            ("regular", self.regular),
            ("left_handed", self.left_handed),
            ("right_handed", self.right_handed),
            ("strongly_distributive", self.strongly_distributive),
            ("distributive", self.distributive),
            ("rectangular", self.rectangular),
            ("has_zero", self.has_zero),
            ("has_top_class", self.has_top_class),
            ("join_complete", self.join_complete),
        ]
    }
}
