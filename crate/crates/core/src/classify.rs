//! Abundance and adequacy, the idempotents a⁺ and a*, and *-subsemigroups.

use thiserror::Error;

use crate::green::{l_star, r_star, GreenData};
use crate::relation::EquivRelation;
use crate::semigroup::FiniteSemigroup;
use crate::subset::ElementSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("semigroup is not adequate")]
    NotAdequate,
    #[error("subset is not closed: {0}*{1} leaves it")]
    NotClosed(usize, usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

fn idempotents_per_class(s: &FiniteSemigroup, rel: &EquivRelation) -> Vec<usize> {
    let mut counts = vec![0; rel.num_classes()];
    for e in s.idempotents().iter() {
        counts[rel.class_of(e)] += 1;
    }
    counts
}

fn every_class_has_idempotent(s: &FiniteSemigroup, rel: &EquivRelation) -> bool {
    idempotents_per_class(s, rel).iter().all(|&c| c >= 1)
}

fn every_class_has_unique_idempotent(s: &FiniteSemigroup, rel: &EquivRelation) -> bool {
    idempotents_per_class(s, rel).iter().all(|&c| c == 1)
}

/// Every R*-class and every L*-class contains an idempotent.
pub fn is_abundant(s: &FiniteSemigroup) -> bool {
    every_class_has_idempotent(s, &r_star(s)) && every_class_has_idempotent(s, &l_star(s))
}

/// Abundant with a unique idempotent in each R*-class.
pub fn is_left_adequate(s: &FiniteSemigroup) -> bool {
    let rs = r_star(s);
    is_abundant(s) && every_class_has_unique_idempotent(s, &rs)
}

/// Abundant with a unique idempotent in each L*-class.
pub fn is_right_adequate(s: &FiniteSemigroup) -> bool {
    let ls = l_star(s);
    is_abundant(s) && every_class_has_unique_idempotent(s, &ls)
}

/// Adequate: abundant with commuting idempotents.
///
/// Cross-checked against the other characterisation (a unique idempotent in
/// every starred class, and ⟨E(S)⟩ regular); disagreement is reported as
/// [`ClassifyError::InternalInconsistency`].
pub fn is_adequate(s: &FiniteSemigroup) -> Result<bool, ClassifyError> {
    let by_definition = is_abundant(s) && s.idempotents_commute();
    let by_uniqueness = adequate_by_unique_idempotents(s);
    if by_definition != by_uniqueness {
        return Err(ClassifyError::InternalInconsistency(format!(
            "adequacy: commuting-idempotent route says {by_definition}, unique-idempotent route says {by_uniqueness}"
        )));
    }
    Ok(by_definition)
}

fn adequate_by_unique_idempotents(s: &FiniteSemigroup) -> bool {
    if !every_class_has_unique_idempotent(s, &r_star(s)) || !every_class_has_unique_idempotent(s, &l_star(s)) {
        return false;
    }
    let generated = s.subsemigroup_closure(&s.idempotents());
    let band = s.restrict(&generated).expect("closure is closed").semigroup;
    band.is_regular()
}

/// a⁺ and a* for every element of an adequate semigroup.
#[derive(Clone, Debug)]
pub struct AdequateData {
    plus: Vec<usize>,
    star: Vec<usize>,
}

impl AdequateData {
    pub fn new(s: &FiniteSemigroup) -> Result<Self, ClassifyError> {
        Self::from_relations(s, &r_star(s), &l_star(s))
    }

    pub fn from_green(s: &FiniteSemigroup, g: &GreenData) -> Result<Self, ClassifyError> {
        Self::from_relations(s, &g.r_star, &g.l_star)
    }

    fn from_relations(s: &FiniteSemigroup, rs: &EquivRelation, ls: &EquivRelation) -> Result<Self, ClassifyError> {
        if !is_adequate(s)? {
            return Err(ClassifyError::NotAdequate);
        }
        let unique_idempotent = |rel: &EquivRelation, a: usize| {
            rel.class_containing(a)
                .iter()
                .find(|&e| s.is_idempotent(e))
                .expect("adequate semigroups have an idempotent in every starred class")
        };
        Ok(AdequateData {
            plus: s.elements().map(|a| unique_idempotent(rs, a)).collect(),
            star: s.elements().map(|a| unique_idempotent(ls, a)).collect(),
        })
    }

    /// The idempotent of the R*-class of `a`.
    pub fn plus(&self, a: usize) -> usize {
        self.plus[a]
    }

    /// The idempotent of the L*-class of `a`.
    pub fn star(&self, a: usize) -> usize {
        self.star[a]
    }
}

/// a⁺: the unique idempotent R*-related to `a`.
pub fn plus_of(s: &FiniteSemigroup, a: usize) -> Result<usize, ClassifyError> {
    Ok(AdequateData::new(s)?.plus(a))
}

/// a*: the unique idempotent L*-related to `a`.
pub fn star_of(s: &FiniteSemigroup, a: usize) -> Result<usize, ClassifyError> {
    Ok(AdequateData::new(s)?.star(a))
}

/// Whether the closed subset `u` is a *-subsemigroup of `s`, judged by the
/// criterion: every a ∈ U has idempotents of U in its L*(S)- and
/// R*(S)-classes.
///
/// When `s` is abundant the answer is compared with
/// [`is_star_subsemigroup_by_restriction`]; the two must agree.
pub fn is_star_subsemigroup(s: &FiniteSemigroup, u: &ElementSubset) -> Result<bool, ClassifyError> {
    let g = GreenData::new(s);
    is_star_subsemigroup_with(s, &g, u)
}

pub(crate) fn is_star_subsemigroup_with(
    s: &FiniteSemigroup,
    g: &GreenData,
    u: &ElementSubset,
) -> Result<bool, ClassifyError> {
    if let Some((a, b)) = s.closure_witness(u) {
        return Err(ClassifyError::NotClosed(a, b));
    }
    let idem: Vec<usize> = u.iter().filter(|&e| s.is_idempotent(e)).collect();
    let criterion = u.iter().all(|a| {
        idem.iter().any(|&e| g.l_star.related(e, a)) && idem.iter().any(|&f| g.r_star.related(f, a))
    });
    let abundant = every_class_has_idempotent(s, &g.r_star) && every_class_has_idempotent(s, &g.l_star);
    if abundant {
        let by_restriction = restriction_route(s, g, u);
        if by_restriction != criterion {
            return Err(ClassifyError::InternalInconsistency(format!(
                "*-subsemigroup test on {u}: idempotent criterion says {criterion}, relation restriction says {by_restriction}"
            )));
        }
    }
    Ok(criterion)
}

/// U is an abundant subsemigroup whose own starred relations are the
/// restrictions of those of S.
pub fn is_star_subsemigroup_by_restriction(s: &FiniteSemigroup, u: &ElementSubset) -> Result<bool, ClassifyError> {
    if let Some((a, b)) = s.closure_witness(u) {
        return Err(ClassifyError::NotClosed(a, b));
    }
    Ok(restriction_route(s, &GreenData::new(s), u))
}

fn restriction_route(s: &FiniteSemigroup, g: &GreenData, u: &ElementSubset) -> bool {
    let sub = s.restrict(u).expect("checked closed").semigroup;
    is_abundant(&sub) && r_star(&sub) == g.r_star.restrict(u) && l_star(&sub) == g.l_star.restrict(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(k, |a, b| a.min(b)).unwrap()
    }

    fn rect(m: usize, k: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(m * k, |a, b| (a / k) * k + b % k).unwrap()
    }

    #[test]
    fn regular_semigroups_are_abundant() {
        assert!(is_abundant(&rect(2, 3)));
        assert!(is_abundant(&FiniteSemigroup::from_fn(3, |a, b| (a + b) % 3).unwrap()));
    }

    #[test]
    fn semilattice_is_adequate() {
        let s = chain(3);
        assert_eq!(is_adequate(&s), Ok(true));
        assert!(is_left_adequate(&s));
        assert!(is_right_adequate(&s));
        for a in s.elements() {
            assert_eq!(plus_of(&s, a), Ok(a));
            assert_eq!(star_of(&s, a), Ok(a));
        }
    }

    #[test]
    fn monogenic_is_not_abundant() {
        let s = FiniteSemigroup::from_fn(2, |_, _| 1).unwrap();
        assert!(!is_abundant(&s));
        assert_eq!(is_adequate(&s), Ok(false));
        assert_eq!(plus_of(&s, 0), Err(ClassifyError::NotAdequate));
    }

    #[test]
    fn rectangular_band_is_not_adequate() {
        let s = rect(2, 2);
        assert_eq!(is_adequate(&s), Ok(false));
        assert!(!is_left_adequate(&s));
        assert!(!is_right_adequate(&s));
        // left zero: R* trivial, L* universal
        let lz = rect(3, 1);
        assert!(is_left_adequate(&lz));
        assert!(!is_right_adequate(&lz));
    }

    #[test]
    fn trivial_semigroup_is_adequate() {
        let t = chain(1);
        assert_eq!(is_adequate(&t), Ok(true));
        assert_eq!(is_star_subsemigroup(&t, &ElementSubset::full(1)), Ok(true));
    }

    #[test]
    fn star_subsemigroups() {
        let s = rect(2, 2);
        for e in s.elements() {
            let u = ElementSubset::from_indices(4, [e]).unwrap();
            assert_eq!(is_star_subsemigroup(&s, &u), Ok(true));
        }
        assert_eq!(is_star_subsemigroup(&s, &ElementSubset::full(4)), Ok(true));
        let not_closed = ElementSubset::from_indices(4, [0, 3]).unwrap();
        assert!(matches!(is_star_subsemigroup(&s, &not_closed), Err(ClassifyError::NotClosed(..))));
        let mono = FiniteSemigroup::from_fn(2, |_, _| 1).unwrap();
        assert_eq!(is_star_subsemigroup(&mono, &ElementSubset::full(2)), Ok(false));
    }
}
