//! Theorem harness: builds instance corpora and runs every structural check
//! whose hypotheses an instance satisfies.
//!
//! Checks are gated on their side conditions. An instance that does not meet
//! a check's hypotheses gets a `Skip` naming the hypothesis that failed, so
//! every skip can be re-tested independently.

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{validate_skew_lattice, Elem, FiniteAlgebra, SkewLattice, Table};
use crate::heyting::{
    is_nc_frame, phi_iso_with, quotient_heyting_with, section_heyting, unique_below, verify_nh,
    with_heyting_implication, NcHeytingCandidate, NcStructure,
};
use crate::models::{
    adjoin_bounds, boolean_lattice, build_pfn_algebra, chain, diamond, direct_product, pentagon,
    rectangular_band, subalgebra_closure, Hand,
};
use crate::properties::{
    commuting_subsets, is_distributive, is_join_complete, is_normal, is_regular,
    is_strongly_distributive, is_symmetric, lattice_section_at,
};
use crate::report::{format_witness, CheckReport};

/// Identifiers of the harness checks, in the order they are run.
pub mod checks {
    pub const SKEW_LATTICE: &str = "skew-lattice-axioms";
    pub const REGULARITY: &str = "regularity";
    pub const PREORDER_SANDWICH: &str = "preorder-sandwich";
    pub const SD_CHARACTERIZATION: &str = "sd-characterization";
    pub const NORMAL_DOWN_SETS: &str = "normal-down-sets";
    pub const TWO_SIDED_TOP: &str = "two-sided-top-commutative";
    pub const UNIQUE_BELOW: &str = "unique-below";
    pub const NH_AXIOMS: &str = "nh-axioms";
    pub const IMPLICATION_T_AXIOMS: &str = "implication-t-axioms";
    pub const IMPLICATION_UNIQUENESS: &str = "implication-uniqueness";
    pub const TOP_ABSORBING: &str = "implication-top-absorbing";
    pub const LOCAL_SECTION: &str = "implication-local-section";
    pub const SECTION_ISOMORPHISM: &str = "section-isomorphism";
    pub const BOTTOM_AND_SECTIONS: &str = "bottom-and-sections";
    pub const COMMUTING_TRANSLATION: &str = "commuting-translation";
    pub const RESTRICTED_SUPREMUM: &str = "restricted-supremum";
    pub const FRAME_FROM_QUOTIENT: &str = "frame-from-quotient";
    pub const SUP_AGREEMENT: &str = "implication-sup-agreement";

    pub const ALL: [&str; 18] = [
        SKEW_LATTICE,
        REGULARITY,
        PREORDER_SANDWICH,
        SD_CHARACTERIZATION,
        NORMAL_DOWN_SETS,
        TWO_SIDED_TOP,
        UNIQUE_BELOW,
        NH_AXIOMS,
        IMPLICATION_T_AXIOMS,
        IMPLICATION_UNIQUENESS,
        TOP_ABSORBING,
        LOCAL_SECTION,
        SECTION_ISOMORPHISM,
        BOTTOM_AND_SECTIONS,
        COMMUTING_TRANSLATION,
        RESTRICTED_SUPREMUM,
        FRAME_FROM_QUOTIENT,
        SUP_AGREEMENT,
    ];
}

/// How an instance was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    PartialFunctions {
        arity: usize,
    },
    Rectangular {
        n: usize,
        hand: Hand,
    },
    Chain {
        n: usize,
    },
    Boolean {
        k: usize,
    },
    Named(&'static str),
    WithHeyting(Box<Provenance>),
    Bounded(Box<Provenance>),
    Product(Box<Provenance>, Box<Provenance>),
    Closure {
        arity: usize,
        generators: Vec<Elem>,
    },
    Random {
        seed: u64,
        arity: usize,
        generators: Vec<Elem>,
    },
    Mutant {
        table: &'static str,
        x: Elem,
        y: Elem,
        value: Elem,
    },
    File(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::PartialFunctions { arity } => write!(f, "pfn({arity})"),
            Provenance::Rectangular { n, hand } => write!(f, "rect-{hand}({n})"),
            Provenance::Chain { n } => write!(f, "chain({n})"),
            Provenance::Boolean { k } => write!(f, "bool({k})"),
            Provenance::Named(name) => f.write_str(name),
            Provenance::WithHeyting(p) => write!(f, "{p}+imp"),
            Provenance::Bounded(p) => write!(f, "bounded({p})"),
            Provenance::Product(a, b) => write!(f, "({a})x({b})"),
            Provenance::Closure { arity, generators } => {
                write!(f, "pfn({arity})<{}>", join_indices(generators))
            }
            Provenance::Random {
                seed,
                arity,
                generators,
            } => write!(
                f,
                "random[seed={seed}]pfn({arity})<{}>",
                join_indices(generators)
            ),
            Provenance::Mutant { table, x, y, value } => {
                write!(f, "pfn(1)/{table}[{x},{y}]={value}")
            }
            Provenance::File(path) => write!(f, "file:{path}"),
        }
    }
}

fn join_indices(xs: &[Elem]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub algebra: FiniteAlgebra,
    pub provenance: Provenance,
}

/// Instances deduplicated by their canonical tables.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    instances: Vec<Instance>,
    by_hash: HashMap<u64, Vec<usize>>,
    /// Why enumeration stopped early, if it did.
    pub truncated: Option<String>,
}

impl Corpus {
    pub fn new() -> Self {
        Corpus::default()
    }

    /// Adds an instance unless one with identical tables is already present.
    pub fn push(
        &mut self,
        name: impl Into<String>,
        algebra: FiniteAlgebra,
        provenance: Provenance,
    ) -> bool {
        let hash = algebra.canonical_hash();
        let bucket = self.by_hash.entry(hash).or_default();
        if bucket
            .iter()
            .any(|&i| self.instances[i].algebra.canonical_key() == algebra.canonical_key())
        {
            return false;
        }
        bucket.push(self.instances.len());
        self.instances.push(Instance {
            name: name.into(),
            algebra,
            provenance,
        });
        true
    }

    pub fn push_named(&mut self, algebra: FiniteAlgebra, provenance: Provenance) -> bool {
        let name = provenance.to_string();
        self.push(name, algebra, provenance)
    }

    pub fn instances(&self) -> &[Instance] {
        &self.instances
    }

    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }

    pub fn total_elements(&self) -> usize {
        self.instances.iter().map(|i| i.algebra.size()).sum()
    }
}

/// Seeded random subalgebra closures appended to a corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomExtension {
    pub seed: u64,
    pub count: usize,
    pub arity: usize,
}

/// Generator parameters for [`enumerate_instances`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusSpec {
    /// Partial-function algebras `P(m)` to include.
    pub pfn_arities: Vec<usize>,
    /// Rectangular bands of both hands with `1..=rect_max` elements.
    pub rect_max: usize,
    /// Chains and Boolean lattices with at most this many elements.
    pub lattice_max: usize,
    /// Also include the lattices equipped with their Heyting implication.
    pub heyting_lattices: bool,
    /// `M3`, `N5` and the rectangular bands with bounds adjoined.
    pub non_distributive: bool,
    /// Pairwise products of a small base family.
    pub products: bool,
    pub max_product_size: usize,
    /// Closures of small generator sets inside `P(closure_arity)`.
    pub closure_arity: Option<usize>,
    pub closure_generators: usize,
    pub random: Option<RandomExtension>,
    /// Stop adding instances once the carriers sum past this.
    pub max_total_elements: usize,
}

impl CorpusSpec {
    pub fn default_corpus() -> Self {
        CorpusSpec {
            pfn_arities: vec![1, 2, 3],
            rect_max: 3,
            lattice_max: 8,
            heyting_lattices: true,
            non_distributive: true,
            products: true,
            max_product_size: 81,
            closure_arity: Some(2),
            closure_generators: 3,
            random: None,
            max_total_elements: 20_000,
        }
    }

    pub fn with_p4(mut self) -> Self {
        if !self.pfn_arities.contains(&4) {
            self.pfn_arities.push(4);
        }
        self
    }

    pub fn with_random(mut self, seed: u64, count: usize) -> Self {
        self.random = Some(RandomExtension {
            seed,
            count,
            arity: 3,
        });
        self
    }

    /// `P(m)` together with the closures of its small generator sets.
    pub fn pfn_only(arity: usize) -> Self {
        CorpusSpec {
            pfn_arities: vec![arity],
            closure_arity: Some(arity),
            ..CorpusSpec::empty()
        }
    }

    pub fn empty() -> Self {
        CorpusSpec {
            pfn_arities: Vec::new(),
            rect_max: 0,
            lattice_max: 0,
            heyting_lattices: false,
            non_distributive: false,
            products: false,
            max_product_size: 0,
            closure_arity: None,
            closure_generators: 3,
            random: None,
            max_total_elements: 20_000,
        }
    }
}

struct Builder {
    corpus: Corpus,
    budget: usize,
}

impl Builder {
    fn add(&mut self, algebra: FiniteAlgebra, provenance: Provenance) {
        if self.corpus.truncated.is_some() {
            return;
        }
        if self.corpus.total_elements() + algebra.size() > self.budget {
            self.corpus.truncated = Some(format!(
                "element budget {} reached before {provenance}",
                self.budget
            ));
            return;
        }
        self.corpus.push_named(algebra, provenance);
    }
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[Elem])) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<Elem>, f: &mut dyn FnMut(&[Elem])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for x in start..n {
            cur.push(x);
            rec(x + 1, n, k, cur, f);
            cur.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), &mut f);
}

/// Builds a deterministic corpus from `spec`. Constructor failures caused by
/// the size budget are recorded as truncation.
pub fn enumerate_instances(spec: &CorpusSpec) -> Corpus {
    let mut b = Builder {
        corpus: Corpus::new(),
        budget: spec.max_total_elements,
    };
    for &m in &spec.pfn_arities {
        match build_pfn_algebra(m) {
            Ok(p) => b.add(p, Provenance::PartialFunctions { arity: m }),
            Err(e) => b.corpus.truncated = Some(e.to_string()),
        }
    }
    for n in 1..=spec.rect_max {
        for hand in [Hand::Left, Hand::Right] {
            if let Ok(r) = rectangular_band(n, hand) {
                b.add(r, Provenance::Rectangular { n, hand });
            }
        }
    }
    let mut lattices = Vec::new();
    for n in 1..=spec.lattice_max {
        lattices.push((chain(n).expect("small chain"), Provenance::Chain { n }));
    }
    for k in 0.. {
        if (1usize << k) > spec.lattice_max {
            break;
        }
        lattices.push((
            boolean_lattice(k).expect("small Boolean lattice"),
            Provenance::Boolean { k },
        ));
    }
    for (lat, prov) in &lattices {
        b.add(lat.clone(), prov.clone());
    }
    if spec.heyting_lattices {
        for (lat, prov) in &lattices {
            if lat.size() > 1 {
                let h = with_heyting_implication(lat)
                    .expect("finite chains and Boolean lattices are Heyting");
                b.add(h, Provenance::WithHeyting(Box::new(prov.clone())));
            }
        }
    }
    if spec.non_distributive {
        b.add(diamond(), Provenance::Named("M3"));
        b.add(pentagon(), Provenance::Named("N5"));
        for hand in [Hand::Left, Hand::Right] {
            let band = rectangular_band(2, hand).expect("band");
            let bounded = adjoin_bounds(&band).expect("small extension");
            b.add(
                bounded,
                Provenance::Bounded(Box::new(Provenance::Rectangular { n: 2, hand })),
            );
        }
    }
    if spec.products {
        let base = product_base();
        for i in 0..base.len() {
            for j in i..base.len() {
                let (a, pa) = &base[i];
                let (c, pc) = &base[j];
                if a.size() * c.size() > spec.max_product_size {
                    continue;
                }
                if let Ok(p) = direct_product(a, c) {
                    b.add(
                        p,
                        Provenance::Product(Box::new(pa.clone()), Box::new(pc.clone())),
                    );
                }
            }
        }
    }
    if let Some(arity) = spec.closure_arity {
        if let Ok(p) = build_pfn_algebra(arity) {
            for k in 1..=spec.closure_generators.min(p.size()) {
                let mut found = Vec::new();
                combinations(p.size(), k, |gens| {
                    let sub = subalgebra_closure(&p, gens, false).expect("generators in range");
                    found.push((sub.algebra, gens.to_vec()));
                });
                for (alg, generators) in found {
                    b.add(alg, Provenance::Closure { arity, generators });
                }
            }
        }
    }
    if let Some(r) = spec.random {
        if let Ok(p) = build_pfn_algebra(r.arity) {
            let mut rng = ChaCha8Rng::seed_from_u64(r.seed);
            let all: Vec<Elem> = p.elements().collect();
            for _ in 0..r.count {
                let k = rng.gen_range(2..=4);
                let mut generators: Vec<Elem> = all.choose_multiple(&mut rng, k).copied().collect();
                generators.sort_unstable();
                let sub = subalgebra_closure(&p, &generators, false).expect("generators in range");
                b.add(
                    sub.algebra,
                    Provenance::Random {
                        seed: r.seed,
                        arity: r.arity,
                        generators,
                    },
                );
            }
        }
    }
    b.corpus
}

fn product_base() -> Vec<(FiniteAlgebra, Provenance)> {
    let heyting = |alg: FiniteAlgebra, p: Provenance| {
        (
            with_heyting_implication(&alg).expect("Boolean lattices are Heyting"),
            Provenance::WithHeyting(Box::new(p)),
        )
    };
    vec![
        (
            build_pfn_algebra(1).expect("P(1)"),
            Provenance::PartialFunctions { arity: 1 },
        ),
        heyting(chain(2).expect("2-chain"), Provenance::Chain { n: 2 }),
        heyting(
            boolean_lattice(2).expect("2^2"),
            Provenance::Boolean { k: 2 },
        ),
        (
            rectangular_band(2, Hand::Left).expect("band"),
            Provenance::Rectangular {
                n: 2,
                hand: Hand::Left,
            },
        ),
        (
            rectangular_band(2, Hand::Right).expect("band"),
            Provenance::Rectangular {
                n: 2,
                hand: Hand::Right,
            },
        ),
    ]
}

/// Every single-cell mutation of the `P(1)` candidate: each cell of the meet,
/// join and implication tables replaced by each of the other two values.
pub fn pfn1_mutants() -> Corpus {
    let base = build_pfn_algebra(1).expect("P(1)");
    let mut corpus = Corpus::new();
    for table in ["meet", "join", "imp"] {
        for x in base.elements() {
            for y in base.elements() {
                for value in base.elements() {
                    let mut tables = [
                        base.meet_table().clone(),
                        base.join_table().clone(),
                        base.imp_table().unwrap().clone(),
                    ];
                    let slot = match table {
                        "meet" => 0,
                        "join" => 1,
                        _ => 2,
                    };
                    if tables[slot].get(x, y) == value {
                        continue;
                    }
                    tables[slot].set(x, y, value);
                    let [meet, join, imp] = tables;
                    let alg = FiniteAlgebra::new(meet, join)
                        .and_then(|a| a.with_imp(imp))
                        .and_then(|a| a.with_zero(0))
                        .and_then(|a| a.with_top(2))
                        .expect("mutant stays in range");
                    corpus.push_named(alg, Provenance::Mutant { table, x, y, value });
                }
            }
        }
    }
    corpus
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(Vec<Elem>),
    Skip(String),
}

/// Result of one check on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremResult {
    pub theorem: &'static str,
    pub instance: String,
    pub outcome: Outcome,
}

impl TheoremResult {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Fail(_))
    }

    pub fn witness(&self) -> Option<&[Elem]> {
        match &self.outcome {
            Outcome::Fail(w) => Some(w),
            _ => None,
        }
    }

    /// Tab-separated `theorem, instance, pass|fail|skip, witness-or-reason`.
    pub fn machine_line(&self) -> String {
        let (status, detail) = match &self.outcome {
            Outcome::Pass => ("pass", String::new()),
            Outcome::Fail(w) => ("fail", format_witness(w)),
            Outcome::Skip(reason) => ("skip", reason.clone()),
        };
        format!(
            "{}\t{}\t{}\t{}",
            self.theorem, self.instance, status, detail
        )
    }
}

impl fmt::Display for TheoremResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => write!(f, "PASS {} on {}", self.theorem, self.instance),
            Outcome::Fail(w) => write!(
                f,
                "FAIL {} on {} witness {}",
                self.theorem,
                self.instance,
                format_witness(w)
            ),
            Outcome::Skip(r) => write!(f, "SKIP {} on {} ({r})", self.theorem, self.instance),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyConfig {
    /// Largest commuting subset enumerated; `None` enumerates all of them.
    pub cap: Option<usize>,
    pub parallel: bool,
}

/// Runs every check on every instance; results are sorted by
/// `(theorem, instance)`.
pub fn run_all(corpus: &Corpus, config: &VerifyConfig) -> Vec<TheoremResult> {
    let per_instance = |inst: &Instance| check_instance(inst, config);
    let mut results: Vec<TheoremResult> = if config.parallel {
        corpus
            .instances()
            .par_iter()
            .flat_map_iter(per_instance)
            .collect()
    } else {
        corpus.instances().iter().flat_map(per_instance).collect()
    };
    results.sort_by(|a, b| (a.theorem, &a.instance).cmp(&(b.theorem, &b.instance)));
    results
}

struct Recorder<'n> {
    instance: &'n str,
    out: Vec<TheoremResult>,
}

impl Recorder<'_> {
    fn record(&mut self, theorem: &'static str, outcome: Outcome) {
        self.out.push(TheoremResult {
            theorem,
            instance: self.instance.to_string(),
            outcome,
        });
    }

    fn report(&mut self, theorem: &'static str, report: &CheckReport) {
        let outcome = match &report.witness {
            None => Outcome::Pass,
            Some(w) => Outcome::Fail(w.clone()),
        };
        self.record(theorem, outcome);
    }

    fn witness(&mut self, theorem: &'static str, witness: Option<Vec<Elem>>) {
        self.record(theorem, witness.map_or(Outcome::Pass, Outcome::Fail));
    }

    fn skip(&mut self, theorem: &'static str, reason: &str) {
        self.record(theorem, Outcome::Skip(reason.to_string()));
    }

    fn skip_rest(&mut self, reason: &str) {
        let done: Vec<&'static str> = self.out.iter().map(|r| r.theorem).collect();
        for id in checks::ALL {
            if !done.contains(&id) {
                self.skip(id, reason);
            }
        }
    }
}

/// `u ≼ x, y ≼ v` implies `x∧v∧y = x∧y` and `x∨u∨y = x∨y`.
pub fn preorder_sandwich(sl: &SkewLattice<'_>) -> CheckReport {
    let alg = sl.algebra();
    let o = sl.orders();
    for x in alg.elements() {
        for y in alg.elements() {
            let lower: Vec<Elem> = alg
                .elements()
                .filter(|&u| o.preceq(u, x) && o.preceq(u, y))
                .collect();
            let upper: Vec<Elem> = alg
                .elements()
                .filter(|&v| o.preceq(x, v) && o.preceq(y, v))
                .collect();
            let (Some(&u0), Some(&v0)) = (lower.first(), upper.first()) else {
                continue;
            };
            if let Some(&v) = upper
                .iter()
                .find(|&&v| alg.meet(alg.meet(x, v), y) != alg.meet(x, y))
            {
                return CheckReport::fail("preorder sandwich", vec![u0, x, y, v]);
            }
            if let Some(&u) = lower
                .iter()
                .find(|&&u| alg.join(alg.join(x, u), y) != alg.join(x, y))
            {
                return CheckReport::fail("preorder sandwich", vec![u, x, y, v0]);
            }
        }
    }
    CheckReport::pass("preorder sandwich")
}

fn check_instance(inst: &Instance, config: &VerifyConfig) -> Vec<TheoremResult> {
    let mut rec = Recorder {
        instance: &inst.name,
        out: Vec::new(),
    };
    let alg = &inst.algebra;
    let axioms = validate_skew_lattice(alg);
    if let Some(bad) = axioms.iter().find(|r| !r.passed) {
        rec.report(checks::SKEW_LATTICE, bad);
        rec.skip_rest("not a skew lattice");
        return rec.out;
    }
    let sl = match SkewLattice::new(alg) {
        Ok(sl) => sl,
        Err(e) => {
            let w = match e {
                crate::AlgebraError::Inconsistent { witness, .. } => witness,
                _ => Vec::new(),
            };
            rec.record(checks::SKEW_LATTICE, Outcome::Fail(w));
            rec.skip_rest("orders inconsistent");
            return rec.out;
        }
    };
    rec.record(checks::SKEW_LATTICE, Outcome::Pass);
    rec.report(checks::REGULARITY, &is_regular(alg));
    rec.report(checks::PREORDER_SANDWICH, &preorder_sandwich(&sl));

    let sd = is_strongly_distributive(alg);
    let symmetric = is_symmetric(alg);
    let normal = is_normal(alg);
    let quotient_distributive = is_distributive(sl.partition().quotient());
    let characterized = symmetric.passed && normal.passed && quotient_distributive.passed;
    rec.witness(
        checks::SD_CHARACTERIZATION,
        (sd.passed != characterized).then(|| {
            [&sd, &symmetric, &normal, &quotient_distributive]
                .iter()
                .find_map(|r| r.witness.clone())
                .unwrap_or_default()
        }),
    );

    let down_sets_lattices = alg
        .elements()
        .map(|u| sl.down_set(u).lattice)
        .find(|r| !r.passed);
    rec.witness(
        checks::NORMAL_DOWN_SETS,
        (normal.passed != down_sets_lattices.is_none()).then(|| {
            down_sets_lattices
                .and_then(|r| r.witness)
                .or(normal.witness.clone())
                .unwrap_or_default()
        }),
    );

    match (sd.passed, alg.find_two_sided_top()) {
        (true, Some(one)) => rec.witness(
            checks::TWO_SIDED_TOP,
            (!alg.is_commutative()).then(|| vec![one]),
        ),
        (false, _) => rec.skip(checks::TWO_SIDED_TOP, "not strongly distributive"),
        (true, None) => rec.skip(checks::TWO_SIDED_TOP, "no two-sided top"),
    }

    if normal.passed {
        rec.witness(checks::UNIQUE_BELOW, unique_below_failure(&sl));
    } else {
        rec.skip(checks::UNIQUE_BELOW, "not normal");
    }

    heyting_checks(&mut rec, &sl, sd.passed);
    frame_checks(&mut rec, &sl, sd.passed, config);
    rec.out
}

fn unique_below_failure(sl: &SkewLattice<'_>) -> Option<Vec<Elem>> {
    let p = sl.partition();
    for a_class in 0..p.len() {
        for b_class in 0..p.len() {
            if a_class == b_class || !p.class_above(a_class, b_class) {
                continue;
            }
            for &a in p.class(a_class) {
                if unique_below(sl, p.class(b_class), a).is_err() {
                    return Some(vec![a, p.class(b_class)[0]]);
                }
            }
        }
    }
    None
}

fn prefixed(t: Elem, w: Vec<Elem>) -> Vec<Elem> {
    let mut out = vec![t];
    out.extend(w);
    out
}

fn table_difference(a: &Table, b: &Table) -> Option<Vec<Elem>> {
    a.first_difference(b).map(|(x, y)| vec![x, y])
}

fn heyting_checks(rec: &mut Recorder<'_>, sl: &SkewLattice<'_>, sd: bool) {
    let alg = sl.algebra();
    let nc = if !sd {
        Err("not strongly distributive".to_string())
    } else {
        NcStructure::from_skew(sl.clone()).map_err(|e| e.to_string())
    };

    // The instance's own implication, if any.
    let own_verified = match NcHeytingCandidate::new(alg) {
        Err(_) if alg.imp_table().is_none() => {
            rec.skip(checks::NH_AXIOMS, "no implication table");
            false
        }
        Err(_) => {
            rec.skip(checks::NH_AXIOMS, "implication without zero or t");
            false
        }
        Ok(cand) => {
            let mut reports = vec![is_strongly_distributive(alg)];
            reports.extend(verify_nh(&cand));
            let bad = reports.into_iter().find(|r| !r.passed);
            let ok = bad.is_none();
            rec.witness(
                checks::NH_AXIOMS,
                bad.map(|r| r.witness.unwrap_or_default()),
            );
            ok
        }
    };

    let nc = match nc {
        Ok(nc) => nc,
        Err(reason) => {
            for id in [checks::IMPLICATION_T_AXIOMS, checks::IMPLICATION_UNIQUENESS] {
                rec.skip(id, &reason);
            }
            candidate_checks(
                rec,
                sl,
                own_verified.then(|| alg.clone()).into_iter().collect(),
            );
            return;
        }
    };

    let mut candidates = Vec::new();
    let mut failure = None;
    for &t in sl.top_class() {
        let built = nc
            .candidate_for(t)
            .map_err(|_| vec![t])
            .and_then(|cand_alg| {
                let cand = NcHeytingCandidate::new(&cand_alg).map_err(|_| vec![t])?;
                match verify_nh(&cand).into_iter().find(|r| !r.passed) {
                    Some(r) => Err(prefixed(t, r.witness.unwrap_or_default())),
                    None => Ok(cand_alg),
                }
            });
        match built {
            Ok(c) => candidates.push(c),
            Err(w) => {
                failure.get_or_insert(w);
            }
        }
    }
    rec.witness(checks::IMPLICATION_T_AXIOMS, failure);

    match (alg.imp_table(), alg.top_t()) {
        (Some(imp), Some(t)) if sl.in_top_class(t) => {
            let w = match nc.implication_t(t) {
                Ok(table) => table_difference(imp, &table),
                Err(_) => Some(vec![t]),
            };
            rec.witness(checks::IMPLICATION_UNIQUENESS, w);
        }
        (Some(_), Some(_)) => rec.skip(checks::IMPLICATION_UNIQUENESS, "t not in top class"),
        _ => rec.skip(checks::IMPLICATION_UNIQUENESS, "no implication table"),
    }

    if own_verified {
        candidates.push(alg.clone());
    }
    candidate_checks(rec, sl, candidates);
}

/// Checks about verified noncommutative Heyting algebras, run on every
/// verified implication available for this carrier.
fn candidate_checks(rec: &mut Recorder<'_>, sl: &SkewLattice<'_>, candidates: Vec<FiniteAlgebra>) {
    if candidates.is_empty() {
        for id in [
            checks::TOP_ABSORBING,
            checks::LOCAL_SECTION,
            checks::SECTION_ISOMORPHISM,
        ] {
            rec.skip(id, "no verified implication");
        }
        return;
    }
    let mut absorbing = None;
    let mut local = None;
    let mut iso = None;
    for cand in &candidates {
        let t = cand.top_t().expect("candidates carry t");
        let imp = |x, y| cand.imp(x, y).unwrap();
        if absorbing.is_none() {
            absorbing = top_absorbing_failure(sl, t, &imp).map(|w| prefixed(t, w));
        }
        if local.is_none() {
            local = local_section_failure(sl, t, &imp).map(|w| prefixed(t, w));
        }
        if iso.is_none() {
            let cand_sl = SkewLattice::new(cand).expect("same tables as the instance");
            iso = section_iso_failure(&cand_sl, t).map(|w| prefixed(t, w));
        }
    }
    rec.witness(checks::TOP_ABSORBING, absorbing);
    rec.witness(checks::LOCAL_SECTION, local);
    rec.witness(checks::SECTION_ISOMORPHISM, iso);
}

/// `x→t = t` for all `x`, and `t↓` closed under `→`.
fn top_absorbing_failure(
    sl: &SkewLattice<'_>,
    t: Elem,
    imp: &dyn Fn(Elem, Elem) -> Elem,
) -> Option<Vec<Elem>> {
    let alg = sl.algebra();
    if let Some(x) = alg.elements().find(|&x| imp(x, t) != t) {
        return Some(vec![x]);
    }
    let down = sl.down_set(t).members;
    for &y in &down {
        for &z in &down {
            if !sl.leq(imp(y, z), t) {
                return Some(vec![y, z]);
            }
        }
    }
    None
}

/// `y`, `y∨(t∧x∧t)∨y` and `x→y` all lie in the lattice `(y∨t∨y)↓`.
fn local_section_failure(
    sl: &SkewLattice<'_>,
    t: Elem,
    imp: &dyn Fn(Elem, Elem) -> Elem,
) -> Option<Vec<Elem>> {
    let alg = sl.algebra();
    for y in alg.elements() {
        let top = alg.join_sandwich(y, t);
        if !sl.down_set(top).lattice.passed {
            return Some(vec![y]);
        }
        for x in alg.elements() {
            let inner = alg.join_sandwich(y, alg.meet_sandwich(t, x));
            if !sl.leq(y, top) || !sl.leq(inner, top) || !sl.leq(imp(x, y), top) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

/// `t↓` is a Heyting algebra, each `φ: t↓ → t'↓` is a Heyting isomorphism
/// with inverse `ψ`, `D` is compatible with `→` and `S/D ≅ t↓`.
fn section_iso_failure(sl: &SkewLattice<'_>, t: Elem) -> Option<Vec<Elem>> {
    match section_heyting(sl, t) {
        Ok((lat, members)) => {
            if let Some(r) = lat.check_axioms().into_iter().find(|r| !r.passed) {
                let w = r.witness.unwrap_or_default();
                return Some(w.into_iter().map(|i| members[i]).collect());
            }
        }
        Err(_) => return Some(Vec::new()),
    }
    for &t_prime in sl.top_class() {
        match phi_iso_with(sl, t, t_prime) {
            Ok(map) => {
                if let Some(r) = map.checks.into_iter().find(|r| !r.passed) {
                    return Some(prefixed(t_prime, r.witness.unwrap_or_default()));
                }
            }
            Err(_) => return Some(vec![t_prime]),
        }
    }
    match quotient_heyting_with(sl) {
        Ok(q) => q
            .check_axioms()
            .into_iter()
            .find(|r| !r.passed)
            .map(|r| r.witness.unwrap_or_default()),
        Err(crate::AlgebraError::Inconsistent { witness, .. }) => Some(witness),
        Err(_) => Some(Vec::new()),
    }
}

fn frame_checks(rec: &mut Recorder<'_>, sl: &SkewLattice<'_>, sd: bool, config: &VerifyConfig) {
    let alg = sl.algebra();
    if !sd {
        for id in [
            checks::BOTTOM_AND_SECTIONS,
            checks::COMMUTING_TRANSLATION,
            checks::RESTRICTED_SUPREMUM,
            checks::FRAME_FROM_QUOTIENT,
            checks::SUP_AGREEMENT,
        ] {
            rec.skip(id, "not strongly distributive");
        }
        return;
    }
    let join_complete = is_join_complete(sl, config.cap).passed;

    if join_complete {
        let w = if alg.find_bottom().is_none() {
            Some(Vec::new())
        } else if let Some(r) = alg
            .elements()
            .map(|u| sl.down_set(u).lattice)
            .find(|r| !r.passed)
        {
            r.witness
        } else {
            sl.top_class().iter().find_map(|&t| {
                let s = lattice_section_at(sl, t).ok()?;
                (!s.check.passed).then(|| vec![t])
            })
        };
        rec.witness(checks::BOTTOM_AND_SECTIONS, w);
    } else {
        rec.skip(checks::BOTTOM_AND_SECTIONS, "not join complete");
    }

    rec.witness(
        checks::COMMUTING_TRANSLATION,
        commuting_translation_failure(sl),
    );

    if join_complete {
        rec.witness(
            checks::RESTRICTED_SUPREMUM,
            restricted_supremum_failure(sl, config.cap),
        );
    } else {
        rec.skip(checks::RESTRICTED_SUPREMUM, "not join complete");
    }

    let frame = match alg.zero().or_else(|| alg.find_bottom()) {
        None => {
            rec.skip(checks::FRAME_FROM_QUOTIENT, "no zero");
            false
        }
        Some(_) => {
            let r = is_nc_frame(sl, config.cap);
            rec.report(checks::FRAME_FROM_QUOTIENT, &r);
            r.passed
        }
    };

    if !frame {
        rec.skip(checks::SUP_AGREEMENT, "not a noncommutative frame");
        return;
    }
    let nc = match NcStructure::from_skew(sl.clone()) {
        Ok(nc) => nc,
        Err(e) => {
            rec.skip(checks::SUP_AGREEMENT, &e.to_string());
            return;
        }
    };
    let mut failure = None;
    for &t in sl.top_class() {
        let w = match (nc.implication_t(t), nc.implication_via_sup_table(t)) {
            (Ok(a), Ok(b)) => table_difference(&a, &b),
            _ => Some(Vec::new()),
        };
        if let Some(w) = w {
            failure = Some(prefixed(t, w));
            break;
        }
    }
    if failure.is_none() {
        if let (Some(imp), Some(t)) = (alg.imp_table(), alg.top_t()) {
            let own_ok = NcHeytingCandidate::new(alg)
                .map(|c| verify_nh(&c).iter().all(|r| r.passed))
                .unwrap_or(false);
            if own_ok && sl.in_top_class(t) {
                failure = match nc.implication_via_sup_table(t) {
                    Ok(table) => table_difference(imp, &table).map(|w| prefixed(t, w)),
                    Err(_) => Some(vec![t]),
                };
            }
        }
    }
    rec.witness(checks::SUP_AGREEMENT, failure);
}

/// For commuting `x_i`, `x_j` and any `y`, both `y∧x_i, y∧x_j` and
/// `x_i∧y, x_j∧y` commute. Commutation is pairwise, so pairs suffice.
fn commuting_translation_failure(sl: &SkewLattice<'_>) -> Option<Vec<Elem>> {
    let alg = sl.algebra();
    for a in alg.elements() {
        for b in a + 1..alg.size() {
            if !alg.commutes(a, b) {
                continue;
            }
            for y in alg.elements() {
                if !alg.commutes(alg.meet(y, a), alg.meet(y, b))
                    || !alg.commutes(alg.meet(a, y), alg.meet(b, y))
                {
                    return Some(vec![a, b, y]);
                }
            }
        }
    }
    None
}

/// With `x = ⋁x_i` for a commuting family below some top-class `t`, and
/// `τ = y∨x∨t∨y∨x`: `(⋁(x_i∧τ))∧y = (⋁x_i)∧y`.
///
/// Witness: `y, t` followed by the family.
fn restricted_supremum_failure(sl: &SkewLattice<'_>, cap: Option<usize>) -> Option<Vec<Elem>> {
    let alg = sl.algebra();
    let j = |a, b| alg.join(a, b);
    let mut image = Vec::new();
    for subset in commuting_subsets(sl, cap) {
        let x = subset.supremum?;
        for &t in sl.top_class() {
            if !subset.members.iter().all(|&xi| sl.leq(xi, t)) {
                continue;
            }
            for y in alg.elements() {
                let tau = j(j(j(j(y, x), t), y), x);
                image.clear();
                image.extend(subset.members.iter().map(|&xi| alg.meet(xi, tau)));
                let ok = sl
                    .supremum(&image)
                    .is_some_and(|s| alg.meet(s, y) == alg.meet(x, y));
                if !ok {
                    let mut w = vec![y, t];
                    w.extend_from_slice(&subset.members);
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Corpus-wide form of the two-sided-top check: any strongly distributive
/// instance with a two-sided top must be commutative. The witness holds the
/// offending instance's position in the corpus and its top.
pub fn search_two_sided_top(corpus: &Corpus) -> TheoremResult {
    let mut outcome = Outcome::Pass;
    let mut any = false;
    for (i, inst) in corpus.instances().iter().enumerate() {
        let alg = &inst.algebra;
        if !validate_skew_lattice(alg).iter().all(|r| r.passed) {
            continue;
        }
        let Some(one) = alg.find_two_sided_top() else {
            continue;
        };
        if !is_strongly_distributive(alg).passed {
            continue;
        }
        any = true;
        if !alg.is_commutative() {
            outcome = Outcome::Fail(vec![i, one]);
            break;
        }
    }
    if !any && outcome == Outcome::Pass {
        outcome = Outcome::Skip("no strongly distributive instance with a two-sided top".into());
    }
    TheoremResult {
        theorem: checks::TWO_SIDED_TOP,
        instance: "corpus".into(),
        outcome,
    }
}

/// Counts of each outcome kind.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

pub fn summarize(results: &[TheoremResult]) -> Summary {
    results.iter().fold(Summary::default(), |mut s, r| {
        match r.outcome {
            Outcome::Pass => s.passed += 1,
            Outcome::Fail(_) => s.failed += 1,
            Outcome::Skip(_) => s.skipped += 1,
        }
        s
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_corpus_gives_no_results() {
        let corpus = enumerate_instances(&CorpusSpec::empty());
        assert!(corpus.is_empty());
        assert!(run_all(&corpus, &VerifyConfig::default()).is_empty());
    }

    #[test]
    fn pfn1_spec_has_four_closures() {
        let corpus = enumerate_instances(&CorpusSpec::pfn_only(1));
        let names: Vec<&str> = corpus.instances().iter().map(|i| i.name.as_str()).collect();
        assert_eq!(corpus.len(), 5, "{names:?}");
        assert_eq!(names[0], "pfn(1)");
    }

    #[test]
    fn dedup_by_tables() {
        let mut c = Corpus::new();
        assert!(c.push("a", chain(2).unwrap(), Provenance::Chain { n: 2 }));
        assert!(!c.push("b", chain(2).unwrap(), Provenance::Chain { n: 2 }));
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn every_instance_gets_every_check() {
        let corpus = enumerate_instances(&CorpusSpec::pfn_only(1));
        let results = run_all(&corpus, &VerifyConfig::default());
        assert_eq!(results.len(), corpus.len() * checks::ALL.len());
        assert!(results.iter().all(|r| !r.failed()), "{results:#?}");
    }

    #[test]
    fn machine_line_shape() {
        let r = TheoremResult {
            theorem: checks::NH_AXIOMS,
            instance: "x".into(),
            outcome: Outcome::Fail(vec![0, 2]),
        };
        assert_eq!(r.machine_line(), "nh-axioms\tx\tfail\t(0,2)");
    }
}
