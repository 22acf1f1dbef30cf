use super::{TransversalAnalysis, TransversalError};

/// S⁰SS⁰ ⊆ S⁰, the product set over all triples.
fn quasi_ideal_by_products(a: &TransversalAnalysis) -> Option<(usize, usize, usize)> {
    let s = a.parent();
    let s0 = a.transversal().to_vec();
    for &p in &s0 {
        for x in s.elements() {
            let px = s.mul(p, x);
            for &q in &s0 {
                if !a.in_transversal(s.mul(px, q)) {
                    return Some((p, x, q));
                }
            }
        }
    }
    None
}

fn products_outside(
    a: &TransversalAnalysis,
    left: &crate::ElementSubset,
    right: &crate::ElementSubset,
    keep: impl Fn(usize) -> bool,
) -> Option<(usize, usize)> {
    let s = a.parent();
    for l in left.iter() {
        for r in right.iter() {
            if !keep(s.mul(l, r)) {
                return Some((l, r));
            }
        }
    }
    None
}

/// Quasi-ideal test by three independent criteria: S⁰SS⁰ ⊆ S⁰, ΛI ⊆ S⁰
/// and RL ⊆ S⁰. They must agree.
pub fn is_quasi_ideal(a: &TransversalAnalysis) -> Result<bool, TransversalError> {
    let by_products = quasi_ideal_by_products(a);
    let by_lambda_i = products_outside(a, a.set_lambda(), a.set_i(), |p| a.in_transversal(p));
    let by_r_l = products_outside(a, a.set_r(), a.set_l(), |p| a.in_transversal(p));
    let verdicts = [by_products.is_none(), by_lambda_i.is_none(), by_r_l.is_none()];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(TransversalError::InternalInconsistency(format!(
            "quasi-ideal criteria disagree: S⁰SS⁰ witness {by_products:?}, ΛI witness {by_lambda_i:?}, RL witness {by_r_l:?}"
        )));
    }
    Ok(verdicts[0])
}

fn weakly_multiplicative_witness(a: &TransversalAnalysis) -> Option<(usize, usize)> {
    products_outside(a, a.set_lambda(), a.set_i(), |p| a.set_e0().contains(a.bar(p)))
}

/// {bar(li) : l ∈ Λ, i ∈ I} ⊆ E⁰.
pub fn is_weakly_multiplicative(a: &TransversalAnalysis) -> Result<bool, TransversalError> {
    Ok(weakly_multiplicative_witness(a).is_none())
}

/// ΛI ⊆ E⁰. Also checks that this holds exactly when the transversal is
/// weakly multiplicative and a quasi-ideal.
pub fn is_multiplicative(a: &TransversalAnalysis) -> Result<bool, TransversalError> {
    let direct = products_outside(a, a.set_lambda(), a.set_i(), |p| a.set_e0().contains(p));
    let multiplicative = direct.is_none();
    let weak = is_weakly_multiplicative(a)?;
    let quasi = is_quasi_ideal(a)?;
    if multiplicative != (weak && quasi) {
        return Err(TransversalError::InternalInconsistency(format!(
            "multiplicative = {multiplicative} (witness {direct:?}) but weakly multiplicative = {weak}, quasi-ideal = {quasi}"
        )));
    }
    Ok(multiplicative)
}
