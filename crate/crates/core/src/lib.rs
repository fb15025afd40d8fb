//! Finite skew lattices as operation tables: axiom checking, natural orders,
//! Green's relation `D`, noncommutative Heyting implications and
//! noncommutative frames, with brute-force verification over instance corpora.

pub mod algebra;
pub mod error;
pub mod heyting;
pub mod lattice;
pub mod models;
pub mod properties;
pub mod report;
pub mod search;
pub mod verify;

pub use algebra::{
    compute_orders, d_partition, down_set, validate_skew_lattice, DClassPartition, DownSet, Elem,
    FiniteAlgebra, OrderRelations, SkewLattice, Table,
};
pub use error::{AlgebraError, Result};
pub use heyting::{
    heyting_implication, implication_t, implication_via_sup, is_nc_frame, phi_iso,
    quotient_heyting, unique_below, verify_nh, HeytingLattice, NcHeytingCandidate, NcStructure,
};
pub use models::{
    adjoin_bounds, boolean_lattice, build_pfn_algebra, chain, diamond, direct_product,
    lattice_from_order, pentagon, rectangular_band, subalgebra_closure, Hand, PartialFunctionCode,
};
pub use properties::{
    commuting_subsets, handedness, is_distributive, is_join_complete, is_normal,
    is_strongly_distributive, is_symmetric, lattice_section_at, top_class, CommutingSubset,
    Handedness, PropertyProfile,
};
pub use report::CheckReport;
pub use verify::{
    enumerate_instances, pfn1_mutants, run_all, Corpus, CorpusSpec, Instance, Outcome, Provenance,
    TheoremResult, VerifyConfig,
};
