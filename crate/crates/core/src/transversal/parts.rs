use crate::semigroup::Restriction;

use super::{analyze_transversal, left_adequate_equivalences, right_adequate_equivalences};
use super::{TransversalAnalysis, TransversalError};

/// L and R of a quasi-ideal transversal as standalone semigroups, each
/// analysed with the (localised) transversal.
#[derive(Clone, Debug)]
pub struct QuasiIdealParts {
    pub left: Restriction,
    pub left_analysis: TransversalAnalysis,
    pub right: Restriction,
    pub right_analysis: TransversalAnalysis,
}

fn inconsistent(msg: impl Into<String>) -> TransversalError {
    TransversalError::InternalInconsistency(msg.into())
}

/// Splits off L and R and verifies that they are subsemigroups, that L is
/// left adequate and R right adequate, and that S⁰ is a quasi-ideal adequate
/// transversal of both.
pub fn quasi_ideal_parts(a: &TransversalAnalysis) -> Result<QuasiIdealParts, TransversalError> {
    if !a.quasi_ideal() {
        return Err(TransversalError::NotQuasiIdeal);
    }
    let s = a.parent();
    let split = |set: &crate::ElementSubset, name: &str| -> Result<(Restriction, TransversalAnalysis), TransversalError> {
        let part = s
            .restrict(set)
            .map_err(|(x, y)| inconsistent(format!("{name} is not closed: {x}*{y} = {}", s.mul(x, y))))?;
        let local = part
            .localize_subset(a.transversal())
            .ok_or_else(|| inconsistent(format!("S⁰ is not contained in {name}")))?;
        let analysis = analyze_transversal(&part.semigroup, &local)
            .map_err(|e| inconsistent(format!("S⁰ is not an adequate transversal of {name}: {e}")))?;
        if !analysis.quasi_ideal() {
            return Err(inconsistent(format!("S⁰ is not a quasi-ideal of {name}")));
        }
        Ok((part, analysis))
    };
    let (left, left_analysis) = split(a.set_l(), "L")?;
    let (right, right_analysis) = split(a.set_r(), "R")?;

    if !left_adequate_equivalences(&left_analysis)?.value {
        return Err(inconsistent("L is not left adequate"));
    }
    if !right_adequate_equivalences(&right_analysis)?.value {
        return Err(inconsistent("R is not right adequate"));
    }
    let n = s.order();
    if left.lift_subset(left_analysis.set_i(), n) != *a.set_i()
        || left.lift_subset(left_analysis.idempotents(), n) != *a.set_i()
    {
        return Err(inconsistent("I(L), I(S) and E(L) differ"));
    }
    if right.lift_subset(right_analysis.set_lambda(), n) != *a.set_lambda()
        || right.lift_subset(right_analysis.idempotents(), n) != *a.set_lambda()
    {
        return Err(inconsistent("Λ(R), Λ(S) and E(R) differ"));
    }
    // the factorisation maps of L and R are those of S
    for x in left.semigroup.elements() {
        let p = left.lift(x);
        if left.lift(left_analysis.e(x)) != a.e(p)
            || left.lift(left_analysis.bar(x)) != a.bar(p)
            || left.lift(left_analysis.f(x)) != a.f(p)
        {
            return Err(inconsistent(format!("factorisation of {p} differs inside L")));
        }
    }
    for x in right.semigroup.elements() {
        let p = right.lift(x);
        if right.lift(right_analysis.e(x)) != a.e(p)
            || right.lift(right_analysis.bar(x)) != a.bar(p)
            || right.lift(right_analysis.f(x)) != a.f(p)
        {
            return Err(inconsistent(format!("factorisation of {p} differs inside R")));
        }
    }
    Ok(QuasiIdealParts { left, left_analysis, right, right_analysis })
}
