//! Finite and holomorphic degeneracy of sphere maps.

mod commutators;
mod generic;
mod pointwise;
mod strata;
mod vector_field;

pub use commutators::{commutator_relations, two_variable_relation, Relation};
pub use generic::{
    classify_map, degeneracy_witness, generic_rank, generic_rank_with_seed, Classification, GenericRank, WITNESS_SEED,
};
pub use pointwise::{cr_fields, default_max_order, jet_degeneracy, kernel_at_point, rank_at, DegeneracyReport, Method};
pub use strata::{
    stratify, stratify_with_seed, x_classify, x_classify_from, x_fiber, StratificationReport, Stratum, XClassification,
    XFiber,
};
pub use vector_field::VectorField;
