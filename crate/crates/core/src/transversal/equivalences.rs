use crate::classify::{is_left_adequate, is_right_adequate};

use super::{TransversalAnalysis, TransversalError};

/// The common truth value of a family of equivalent conditions, with each
/// condition's individual evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub value: bool,
    pub conditions: Vec<(&'static str, bool)>,
}

fn agree(label: &str, conditions: Vec<(&'static str, bool)>) -> Result<EquivalenceReport, TransversalError> {
    let value = conditions[0].1;
    if conditions.iter().any(|&(_, v)| v != value) {
        return Err(TransversalError::InternalInconsistency(format!(
            "{label} conditions disagree: {conditions:?}"
        )));
    }
    Ok(EquivalenceReport { value, conditions })
}

/// S left adequate ⟺ Λ = E⁰ ⟺ R = S⁰ ⟺ L = S ⟺ I = E(S).
pub fn left_adequate_equivalences(a: &TransversalAnalysis) -> Result<EquivalenceReport, TransversalError> {
    agree(
        "left adequate",
        vec![
            ("S is left adequate", is_left_adequate(a.parent())),
            ("Λ = E⁰", a.set_lambda() == a.set_e0()),
            ("R = S⁰", a.set_r() == a.transversal()),
            ("L = S", a.set_l().is_full()),
            ("I = E(S)", a.set_i() == a.idempotents()),
        ],
    )
}

/// S right adequate ⟺ I = E⁰ ⟺ L = S⁰ ⟺ R = S ⟺ Λ = E(S).
pub fn right_adequate_equivalences(a: &TransversalAnalysis) -> Result<EquivalenceReport, TransversalError> {
    agree(
        "right adequate",
        vec![
            ("S is right adequate", is_right_adequate(a.parent())),
            ("I = E⁰", a.set_i() == a.set_e0()),
            ("L = S⁰", a.set_l() == a.transversal()),
            ("R = S", a.set_r().is_full()),
            ("Λ = E(S)", a.set_lambda() == a.idempotents()),
        ],
    )
}
