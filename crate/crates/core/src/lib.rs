//! Finite semigroups as multiplication tables: starred Green's relations,
//! adequate transversals, and spined products of left and right adequate
//! semigroups.

pub mod classify;
pub mod construction;
pub mod families;
pub mod format;
pub mod green;
pub mod iso;
pub mod relation;
pub mod report;
pub mod samples;
pub mod search;
pub mod semigroup;
pub mod subset;
pub mod suite;
pub mod transversal;

pub use classify::{is_abundant, is_adequate, is_left_adequate, is_right_adequate, AdequateData, ClassifyError};
pub use green::{green_l, green_r, l_star, r_star, GreenData};
pub use relation::EquivRelation;
pub use semigroup::{FiniteSemigroup, Restriction, SemigroupError};
pub use subset::ElementSubset;
pub use report::{CheckReport, Outcome};
pub use transversal::{analyze_transversal, TransversalAnalysis, TransversalError};
