//! Spined products L |×| R of a left adequate and a right adequate
//! semigroup over a common quasi-ideal adequate transversal, the reverse
//! decomposition of a semigroup into such a product, and the left adequate
//! (Chen) and regular specialisations.

mod chen;
mod inverse;
mod rebuild;
mod spined;
mod star_map;

use thiserror::Error;

use crate::report::CheckReport;
use crate::transversal::TransversalError;

pub use chen::{chen_axioms, chen_construct, chen_data_from, chen_round_trip, ChenData, ChenProduct};
pub use inverse::{
    build_regular_spined_product, inverse_transversal_analysis, left_inverse_chen, InverseTransversalReport,
    LeftInverseChen, LEFT_INVERSE_OUTCOME, LEFT_INVERSE_WITNESS, LEFT_NORMAL_ABSORPTION, REGULAR_AXIOM_1,
    REGULAR_PAIRING, REGULAR_WITNESS,
};
pub use rebuild::{
    decompose_and_rebuild, Rebuild, IDEMPOTENTS_FROM_SOURCE, ISO_BIJECTION, ISO_HOMOMORPHISM, LR_COVERS, PAIR_IDENTITY,
    PARTS_I, PARTS_L, PARTS_LAMBDA, PARTS_R,
};
pub use spined::{
    build_spined_product, SpinedProduct, AXIOM_3_MULTIPLICATIVE, AXIOM_3_PARTS, SPINED_FACTORISATION, SPINED_IDEMPOTENTS,
    SPINED_STARRED,
};
pub use star_map::{check_star_axioms, extract_star, star_identities, StarMap, STAR_AXIOM_1, STAR_AXIOM_2, STAR_AXIOM_3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("transversal is not a quasi-ideal")]
    NotQuasiIdeal,
    #[error("semigroup is not left adequate")]
    NotLeftAdequate,
    #[error("invalid star map data: {0}")]
    StarMapInvalid(String),
    #[error("star map axioms fail: {}", .0.first_failure().unwrap_or_default())]
    AxiomsFailed(CheckReport),
    #[error("product of pairs {left:?} and {right:?} leaves the spined product")]
    ClosureFailed { left: (usize, usize), right: (usize, usize) },
    #[error("construction check `{check}` failed: {witness}")]
    AssertionFailed { check: String, witness: String },
    #[error("isomorphism check failed: {0}")]
    IsoFailed(String),
    #[error("invalid construction data ({axiom}): {witness}")]
    DataInvalid { axiom: String, witness: String },
    #[error("not regular: {0}")]
    NotRegular(String),
    #[error("not an inverse subsemigroup: {0}")]
    NotInverseSub(String),
    #[error("element {x} has {count} inverses in the transversal")]
    UniquenessFailed { x: usize, count: usize },
    #[error("band is not left normal: {e}*{x}*{y} differs from {e}*{y}*{x}")]
    NotLeftNormal { e: usize, x: usize, y: usize },
    #[error("not a semilattice transversal: {0}")]
    NotSemilatticeTransversal(String),
    #[error("constructed semigroup is not regular: {0}")]
    NotRegularOutcome(String),
    #[error(transparent)]
    Transversal(#[from] TransversalError),
}

pub(crate) fn assertion(check: &str, witness: impl Into<String>) -> ConstructionError {
    ConstructionError::AssertionFailed { check: check.to_string(), witness: witness.into() }
}

/// Turns the first failure in `report` into an error.
pub(crate) fn require(report: &CheckReport) -> Result<(), ConstructionError> {
    match report.failures().next() {
        None => Ok(()),
        Some(o) => Err(assertion(&o.name, o.witness.clone().unwrap_or_default())),
    }
}
