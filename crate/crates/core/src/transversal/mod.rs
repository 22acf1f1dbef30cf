//! Adequate transversals: the factorisation x = e_x·x̄·f_x, the derived sets
//! I, Λ, E⁰, L, R, and the quasi-ideal and multiplicative classification.

mod equivalences;
mod flags;
mod formulas;
mod parts;
mod properties;

use thiserror::Error;

use crate::classify::{self, is_abundant, AdequateData, ClassifyError};
use crate::green::GreenData;
use crate::semigroup::{FiniteSemigroup, Restriction};
use crate::subset::ElementSubset;

pub use equivalences::{left_adequate_equivalences, right_adequate_equivalences, EquivalenceReport};
pub use flags::{is_multiplicative, is_quasi_ideal, is_weakly_multiplicative};
pub use formulas::verify_product_formulas;
pub use parts::{quasi_ideal_parts, QuasiIdealParts};
pub use properties::{basic_properties, l_set_characterizations, r_set_characterizations};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransversalError {
    #[error("the ambient semigroup is not abundant")]
    NotAbundant,
    #[error("transversal is not closed: {0}*{1} leaves it")]
    NotClosed(usize, usize),
    #[error("transversal is not an adequate subsemigroup")]
    NotAdequateSub,
    #[error("transversal is not a *-subsemigroup")]
    NotStarSub,
    #[error("element {x} has decompositions through distinct transversal elements {bars:?}")]
    NotUniqueDecomposition { x: usize, bars: Vec<usize> },
    #[error("element {x} has no decomposition")]
    NoDecomposition { x: usize },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("transversal is not a quasi-ideal")]
    NotQuasiIdeal,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

impl From<ClassifyError> for TransversalError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::NotClosed(a, b) => TransversalError::NotClosed(a, b),
            ClassifyError::NotAdequate => TransversalError::NotAdequateSub,
            ClassifyError::InternalInconsistency(m) => TransversalError::InternalInconsistency(m),
        }
    }
}

/// One factorisation x = e·m·f with e ℒ m⁺ and f ℛ m*.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Decomposition {
    pub e: usize,
    pub m: usize,
    pub f: usize,
}

/// S together with a candidate transversal that has passed the
/// prerequisite checks (closed, adequate, *-subsemigroup).
#[derive(Clone, Debug)]
struct Prepared {
    green: GreenData,
    idempotents: Vec<usize>,
    sub: Restriction,
    /// m⁺ and m* (parent indices) for m in the transversal, `usize::MAX` elsewhere.
    plus: Vec<usize>,
    star: Vec<usize>,
}

impl Prepared {
    fn new(s: &FiniteSemigroup, s0: &ElementSubset) -> Result<Self, TransversalError> {
        if s0.parent_order() != s.order() || s0.is_empty() {
            return Err(TransversalError::PreconditionFailed(format!(
                "transversal {s0} is empty or not a subset of a semigroup of order {}",
                s.order()
            )));
        }
        if let Some((a, b)) = s.closure_witness(s0) {
            return Err(TransversalError::NotClosed(a, b));
        }
        let sub = s.restrict(s0).expect("closed");
        let adequate = match AdequateData::new(&sub.semigroup) {
            Ok(a) => a,
            Err(ClassifyError::NotAdequate) => return Err(TransversalError::NotAdequateSub),
            Err(e) => return Err(e.into()),
        };
        let green = GreenData::new(s);
        if !classify::is_star_subsemigroup_with(s, &green, s0)? {
            return Err(TransversalError::NotStarSub);
        }
        let mut plus = vec![usize::MAX; s.order()];
        let mut star = vec![usize::MAX; s.order()];
        for (i, &m) in sub.to_parent.iter().enumerate() {
            plus[m] = sub.lift(adequate.plus(i));
            star[m] = sub.lift(adequate.star(i));
        }
        Ok(Prepared { green, idempotents: s.idempotents().to_vec(), sub, plus, star })
    }

    /// Every factorisation of every element, bucketed by the product.
    fn all_decompositions(&self, s: &FiniteSemigroup) -> Vec<Vec<Decomposition>> {
        let mut buckets = vec![Vec::new(); s.order()];
        for &m in &self.sub.to_parent {
            let lefts: Vec<usize> =
                self.idempotents.iter().copied().filter(|&e| self.green.l.related(e, self.plus[m])).collect();
            let rights: Vec<usize> =
                self.idempotents.iter().copied().filter(|&f| self.green.r.related(f, self.star[m])).collect();
            for &e in &lefts {
                let em = s.mul(e, m);
                for &f in &rights {
                    buckets[s.mul(em, f)].push(Decomposition { e, m, f });
                }
            }
        }
        for b in &mut buckets {
            b.sort();
        }
        buckets
    }
}

/// All triples (e, m, f) with e, f ∈ E(S), m ∈ S⁰, x = emf, e ℒ m⁺ and
/// f ℛ m*. The list has one entry exactly when the transversal axiom holds
/// at `x`.
pub fn find_decompositions(
    s: &FiniteSemigroup,
    s0: &ElementSubset,
    x: usize,
) -> Result<Vec<Decomposition>, TransversalError> {
    let prep = Prepared::new(s, s0).map_err(|e| match e {
        TransversalError::PreconditionFailed(_) => e,
        other => TransversalError::PreconditionFailed(other.to_string()),
    })?;
    if x >= s.order() {
        return Err(TransversalError::PreconditionFailed(format!("element {x} out of range")));
    }
    Ok(prep.all_decompositions(s).swap_remove(x))
}

/// [`find_decompositions`] for every element at once, indexed by element.
pub fn decomposition_table(s: &FiniteSemigroup, s0: &ElementSubset) -> Result<Vec<Vec<Decomposition>>, TransversalError> {
    let prep = Prepared::new(s, s0).map_err(|e| match e {
        TransversalError::PreconditionFailed(_) => e,
        other => TransversalError::PreconditionFailed(other.to_string()),
    })?;
    Ok(prep.all_decompositions(s))
}

/// A validated adequate transversal with its factorisation maps, derived
/// sets and classification flags.
#[derive(Clone, Debug)]
pub struct TransversalAnalysis {
    parent: FiniteSemigroup,
    transversal: ElementSubset,
    green: GreenData,
    idempotents: ElementSubset,
    sub: Restriction,
    plus: Vec<usize>,
    star: Vec<usize>,
    e_of: Vec<usize>,
    bar_of: Vec<usize>,
    f_of: Vec<usize>,
    set_i: ElementSubset,
    set_lambda: ElementSubset,
    set_e0: ElementSubset,
    set_l: ElementSubset,
    set_r: ElementSubset,
    quasi_ideal: bool,
    multiplicative: bool,
    weakly_multiplicative: bool,
}

/// Validates `s0` as an adequate transversal of `s` and computes everything
/// derived from it.
///
/// Prerequisites are checked in the order: abundance of `s`, closure,
/// adequacy, *-property, then the factorisation of every element; the first
/// failure is returned. On success the basic factorisation identities and
/// the alternative descriptions of R and L are verified, and a failure there
/// is reported as [`TransversalError::InternalInconsistency`].
pub fn analyze_transversal(s: &FiniteSemigroup, s0: &ElementSubset) -> Result<TransversalAnalysis, TransversalError> {
    if !is_abundant(s) {
        return Err(TransversalError::NotAbundant);
    }
    let prep = Prepared::new(s, s0)?;
    let buckets = prep.all_decompositions(s);
    let n = s.order();
    let (mut e_of, mut bar_of, mut f_of) = (vec![0; n], vec![0; n], vec![0; n]);
    for (x, decs) in buckets.iter().enumerate() {
        let Some(first) = decs.first() else {
            return Err(TransversalError::NoDecomposition { x });
        };
        let mut bars: Vec<usize> = decs.iter().map(|d| d.m).collect();
        bars.dedup();
        if bars.len() > 1 {
            return Err(TransversalError::NotUniqueDecomposition { x, bars });
        }
        if decs.len() > 1 {
            return Err(TransversalError::InternalInconsistency(format!(
                "element {x} has one transversal factor {} but several idempotent factor pairs: {decs:?}",
                first.m
            )));
        }
        e_of[x] = first.e;
        bar_of[x] = first.m;
        f_of[x] = first.f;
    }

    let e0 = ElementSubset::from_predicate(n, |x| s0.contains(x) && s.is_idempotent(x));
    let set_i = ElementSubset::from_indices(n, e_of.iter().copied()).expect("in range");
    let set_lambda = ElementSubset::from_indices(n, f_of.iter().copied()).expect("in range");
    let set_r = ElementSubset::from_predicate(n, |x| e_of[x] == e_of[bar_of[x]]);
    let set_l = ElementSubset::from_predicate(n, |x| f_of[x] == f_of[bar_of[x]]);

    let mut analysis = TransversalAnalysis {
        parent: s.clone(),
        transversal: s0.clone(),
        idempotents: s.idempotents(),
        green: prep.green,
        sub: prep.sub,
        plus: prep.plus,
        star: prep.star,
        e_of,
        bar_of,
        f_of,
        set_i,
        set_lambda,
        set_e0: e0,
        set_l,
        set_r,
        quasi_ideal: false,
        multiplicative: false,
        weakly_multiplicative: false,
    };

    for report in [basic_properties(&analysis), r_set_characterizations(&analysis), l_set_characterizations(&analysis)] {
        if let Some(w) = report.first_failure() {
            return Err(TransversalError::InternalInconsistency(w));
        }
    }
    analysis.quasi_ideal = is_quasi_ideal(&analysis)?;
    analysis.weakly_multiplicative = is_weakly_multiplicative(&analysis)?;
    analysis.multiplicative = is_multiplicative(&analysis)?;
    Ok(analysis)
}

impl TransversalAnalysis {
    pub fn parent(&self) -> &FiniteSemigroup {
        &self.parent
    }

    /// S⁰.
    pub fn transversal(&self) -> &ElementSubset {
        &self.transversal
    }

    /// S⁰ as a standalone semigroup with its index maps.
    pub fn transversal_semigroup(&self) -> &Restriction {
        &self.sub
    }

    pub fn green(&self) -> &GreenData {
        &self.green
    }

    /// E(S).
    pub fn idempotents(&self) -> &ElementSubset {
        &self.idempotents
    }

    #[inline]
    pub fn e(&self, x: usize) -> usize {
        self.e_of[x]
    }

    #[inline]
    pub fn bar(&self, x: usize) -> usize {
        self.bar_of[x]
    }

    #[inline]
    pub fn f(&self, x: usize) -> usize {
        self.f_of[x]
    }

    /// m⁺ for m ∈ S⁰.
    pub fn plus(&self, m: usize) -> usize {
        debug_assert!(self.transversal.contains(m));
        self.plus[m]
    }

    /// m* for m ∈ S⁰.
    pub fn star(&self, m: usize) -> usize {
        debug_assert!(self.transversal.contains(m));
        self.star[m]
    }

    pub fn in_transversal(&self, x: usize) -> bool {
        self.transversal.contains(x)
    }

    pub fn e_map(&self) -> &[usize] {
        &self.e_of
    }

    pub fn bar_map(&self) -> &[usize] {
        &self.bar_of
    }

    pub fn f_map(&self) -> &[usize] {
        &self.f_of
    }

    /// I = {e_x : x ∈ S}.
    pub fn set_i(&self) -> &ElementSubset {
        &self.set_i
    }

    /// Λ = {f_x : x ∈ S}.
    pub fn set_lambda(&self) -> &ElementSubset {
        &self.set_lambda
    }

    /// E⁰ = E(S⁰).
    pub fn set_e0(&self) -> &ElementSubset {
        &self.set_e0
    }

    /// L = {x : f_x = f_x̄}.
    pub fn set_l(&self) -> &ElementSubset {
        &self.set_l
    }

    /// R = {x : e_x = e_x̄}.
    pub fn set_r(&self) -> &ElementSubset {
        &self.set_r
    }

    pub fn quasi_ideal(&self) -> bool {
        self.quasi_ideal
    }

    pub fn multiplicative(&self) -> bool {
        self.multiplicative
    }

    pub fn weakly_multiplicative(&self) -> bool {
        self.weakly_multiplicative
    }
}

#[cfg(test)]
mod tests;
