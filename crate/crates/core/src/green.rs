//! Green's relations ℛ, ℒ and their starred versions R*, L*.
//!
//! All quantifiers over S¹ run on [`FiniteSemigroup::adjoin_identity`];
//! results are reported on the original element indices.

use thiserror::Error;

use crate::relation::EquivRelation;
use crate::semigroup::FiniteSemigroup;
use crate::subset::ElementSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GreenError {
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
}

/// a ℛ b iff aS¹ = bS¹.
pub fn green_r(s: &FiniteSemigroup) -> EquivRelation {
    let ideals: Vec<ElementSubset> = s
        .elements()
        .map(|a| {
            let mut ideal = ElementSubset::from_predicate(s.order(), |x| s.row(a).contains(&x));
            ideal.insert(a);
            ideal
        })
        .collect();
    EquivRelation::from_keys(ideals)
}

/// a ℒ b iff S¹a = S¹b.
pub fn green_l(s: &FiniteSemigroup) -> EquivRelation {
    let ideals: Vec<ElementSubset> = s
        .elements()
        .map(|a| {
            let mut ideal = ElementSubset::empty(s.order());
            for x in s.elements() {
                ideal.insert(s.mul(x, a));
            }
            ideal.insert(a);
            ideal
        })
        .collect();
    EquivRelation::from_keys(ideals)
}

/// Relabels a sequence by first occurrence, so that two sequences get the
/// same kernel signature exactly when they induce the same partition of
/// their index set.
fn kernel_signature(values: impl Iterator<Item = usize>, bound: usize) -> Vec<u32> {
    let mut seen = vec![u32::MAX; bound];
    let mut next = 0u32;
    values
        .map(|v| {
            if seen[v] == u32::MAX {
                seen[v] = next;
                next += 1;
            }
            seen[v]
        })
        .collect()
}

/// R*: a R* b iff for all x, y ∈ S¹, xa = ya ⟺ xb = yb.
///
/// Each a is keyed by the partition of S¹ induced by x ↦ xa; two elements
/// are R*-related exactly when those partitions coincide.
pub fn r_star(s: &FiniteSemigroup) -> EquivRelation {
    let s1 = s.adjoin_identity();
    let m = s1.order();
    EquivRelation::from_keys(s.elements().map(|a| kernel_signature((0..m).map(|x| s1.mul(x, a)), m)))
}

/// L*: the left-right dual of [`r_star`].
pub fn l_star(s: &FiniteSemigroup) -> EquivRelation {
    let s1 = s.adjoin_identity();
    let m = s1.order();
    EquivRelation::from_keys(s.elements().map(|a| kernel_signature((0..m).map(|x| s1.mul(a, x)), m)))
}

/// R* by evaluating the defining quantifier for every pair. O(n⁴); the
/// reference that [`r_star`] is tested against.
pub fn r_star_definitional(s: &FiniteSemigroup) -> EquivRelation {
    let s1 = s.adjoin_identity();
    let m = s1.order();
    EquivRelation::from_pairwise(s.order(), |a, b| {
        (0..m).all(|x| (0..m).all(|y| (s1.mul(x, a) == s1.mul(y, a)) == (s1.mul(x, b) == s1.mul(y, b))))
    })
}

/// L* by the defining quantifier.
pub fn l_star_definitional(s: &FiniteSemigroup) -> EquivRelation {
    let s1 = s.adjoin_identity();
    let m = s1.order();
    EquivRelation::from_pairwise(s.order(), |a, b| {
        (0..m).all(|x| (0..m).all(|y| (s1.mul(a, x) == s1.mul(a, y)) == (s1.mul(b, x) == s1.mul(b, y))))
    })
}

/// For idempotent e: e R* a iff ea = a and xa = ya implies xe = ye for all
/// x, y ∈ S¹.
pub fn check_e_rstar(s: &FiniteSemigroup, e: usize, a: usize) -> Result<bool, GreenError> {
    if !s.is_idempotent(e) {
        return Err(GreenError::NotIdempotent(e));
    }
    if s.mul(e, a) != a {
        return Ok(false);
    }
    let s1 = s.adjoin_identity();
    let m = s1.order();
    Ok((0..m).all(|x| (0..m).all(|y| s1.mul(x, a) != s1.mul(y, a) || s1.mul(x, e) == s1.mul(y, e))))
}

/// Dual of [`check_e_rstar`]: e L* a iff ae = a and ax = ay implies ex = ey.
pub fn check_e_lstar(s: &FiniteSemigroup, e: usize, a: usize) -> Result<bool, GreenError> {
    if !s.is_idempotent(e) {
        return Err(GreenError::NotIdempotent(e));
    }
    if s.mul(a, e) != a {
        return Ok(false);
    }
    let s1 = s.adjoin_identity();
    let m = s1.order();
    Ok((0..m).all(|x| (0..m).all(|y| s1.mul(a, x) != s1.mul(a, y) || s1.mul(e, x) == s1.mul(e, y))))
}

/// The four relations of a semigroup, computed once.
#[derive(Clone, Debug)]
pub struct GreenData {
    pub r: EquivRelation,
    pub l: EquivRelation,
    pub r_star: EquivRelation,
    pub l_star: EquivRelation,
}

impl GreenData {
    pub fn new(s: &FiniteSemigroup) -> Self {
        GreenData { r: green_r(s), l: green_l(s), r_star: r_star(s), l_star: l_star(s) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(k: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(k, |a, b| a.min(b)).unwrap()
    }

    fn cyclic(k: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(k, |a, b| (a + b) % k).unwrap()
    }

    // (i, λ) stored as i * k + λ
    fn rect(m: usize, k: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(m * k, |a, b| (a / k) * k + b % k).unwrap()
    }

    #[test]
    fn semilattice_relations_are_trivial() {
        let s = chain(4);
        for rel in [green_r(&s), green_l(&s), r_star(&s), l_star(&s)] {
            assert_eq!(rel.num_classes(), 4);
        }
    }

    #[test]
    fn group_relations_are_universal() {
        let s = cyclic(5);
        for rel in [green_r(&s), green_l(&s), r_star(&s), l_star(&s)] {
            assert_eq!(rel.num_classes(), 1);
        }
    }

    #[test]
    fn rectangular_band_green() {
        let (m, k) = (2, 3);
        let s = rect(m, k);
        let r = green_r(&s);
        let l = green_l(&s);
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(r.related(a, b), a / k == b / k);
                assert_eq!(l.related(a, b), a % k == b % k);
            }
        }
    }

    #[test]
    fn monogenic_starred_classes() {
        // 0 = a, 1 = a²; a·a = a², everything else a².
        let s = FiniteSemigroup::from_fn(2, |_, _| 1).unwrap();
        // S¹ = {a, a², 1}; x ↦ x·a is (a², a², a) and x ↦ x·a² is (a², a², a²),
        // which separate 1 from a only in the first case.
        let rs = r_star(&s);
        assert!(!rs.related(0, 1));
        assert_eq!(rs, r_star_definitional(&s));
        assert_eq!(l_star(&s), l_star_definitional(&s));
        assert_eq!(check_e_rstar(&s, 1, 0), Ok(false));
        assert_eq!(check_e_rstar(&s, 0, 0), Err(GreenError::NotIdempotent(0)));
    }

    #[test]
    fn e_rstar_reflexive_and_group() {
        let s = chain(3);
        for e in s.elements() {
            assert_eq!(check_e_rstar(&s, e, e), Ok(true));
            assert_eq!(check_e_lstar(&s, e, e), Ok(true));
        }
        let g = cyclic(4);
        for x in g.elements() {
            assert_eq!(check_e_rstar(&g, 0, x), Ok(true));
        }
    }
}
