//! Exact coefficients, linear combinations, enumerators and the Takeuchi
//! antipode oracle.

mod enumerate;
mod lincomb;
mod takeuchi;

pub use enumerate::{
    antipode_partitions, max_ordered_set_partitions, ordered_partitions_with_empty, permutations,
    AntipodePartition, OrderedPartition, SetPartition,
};
pub use lincomb::{coeff, format_coefficient, Coefficient, LinComb};
pub use takeuchi::{
    multiply, satisfies_antipode_axiom, takeuchi_antipode, takeuchi_expansion, ExpansionStats,
    GradedBialgebra, TakeuchiExpansion,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KernelError {
    #[error("the antipode formula needs a nonempty word")]
    EmptyWord,
    #[error("malformed bialgebra closure: {0}")]
    MalformedClosure(String),
}

/// `(-1)^n` as a coefficient.
pub fn sign(n: usize) -> Coefficient {
    coeff(if n.is_multiple_of(2) { 1 } else { -1 })
}
