//! Search for adequate transversals among the subsemigroups of a semigroup.

use std::collections::HashSet;

use crate::semigroup::FiniteSemigroup;
use crate::subset::ElementSubset;
use crate::transversal::{analyze_transversal, TransversalAnalysis, TransversalError};

/// Largest order for which [`search_all_subsets`] enumerates the power set.
pub const POWER_SET_LIMIT: usize = 12;

/// A transversal found by search.
#[derive(Clone, Debug)]
pub struct Found {
    pub transversal: ElementSubset,
    pub analysis: TransversalAnalysis,
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k == 0 || k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Subsemigroups generated by at most `max_generators` elements, together
/// with `s` itself, each listed once and ordered by their sorted member lists.
pub fn generated_subsemigroups(s: &FiniteSemigroup, max_generators: usize) -> Vec<ElementSubset> {
    let full = ElementSubset::full(s.order());
    let mut seen: HashSet<ElementSubset> = HashSet::from([full.clone()]);
    let mut out = vec![full];
    for k in 1..=max_generators.min(s.order()) {
        combinations(s.order(), k, |gens| {
            let g = ElementSubset::from_indices(s.order(), gens.iter().copied()).expect("in range");
            let closed = s.subsemigroup_closure(&g);
            if seen.insert(closed.clone()) {
                out.push(closed);
            }
        });
    }
    out.sort_by_key(|c| c.to_vec());
    out
}

fn analyse_candidates(
    s: &FiniteSemigroup,
    candidates: impl IntoIterator<Item = ElementSubset>,
) -> Result<Vec<Found>, TransversalError> {
    let mut found = Vec::new();
    for c in candidates {
        match analyze_transversal(s, &c) {
            Ok(analysis) => found.push(Found { transversal: c, analysis }),
            Err(TransversalError::InternalInconsistency(msg)) => {
                return Err(TransversalError::InternalInconsistency(format!("transversal candidate {c}: {msg}")))
            }
            Err(TransversalError::NotAbundant) => return Ok(Vec::new()),
            Err(_) => {}
        }
    }
    Ok(found)
}

/// Every adequate transversal among the subsemigroups generated by at most
/// `max_generators` elements.
///
/// Candidates that fail the transversal conditions are skipped; an internal
/// inconsistency in any candidate's analysis aborts the search.
pub fn search_transversals(s: &FiniteSemigroup, max_generators: usize) -> Result<Vec<Found>, TransversalError> {
    analyse_candidates(s, generated_subsemigroups(s, max_generators))
}

/// Every adequate transversal of `s`, found by testing every closed nonempty
/// subset. Only available up to [`POWER_SET_LIMIT`] elements.
pub fn search_all_subsets(s: &FiniteSemigroup) -> Result<Vec<Found>, TransversalError> {
    let n = s.order();
    if n > POWER_SET_LIMIT {
        return Err(TransversalError::PreconditionFailed(format!(
            "power-set search is limited to order {POWER_SET_LIMIT}, got {n}"
        )));
    }
    let mut closed: Vec<ElementSubset> = (1u32..(1 << n))
        .map(|mask| ElementSubset::from_predicate(n, |i| mask & (1 << i) != 0))
        .filter(|c| s.is_closed(c))
        .collect();
    closed.sort_by_key(|c| c.to_vec());
    analyse_candidates(s, closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{brandt_b2, rectangular_band, semilattice_chain};

    #[test]
    fn rectangular_band_has_exactly_the_singletons() {
        let s = rectangular_band(2, 2).unwrap();
        let all = search_all_subsets(&s).unwrap();
        let sets: Vec<Vec<usize>> = all.iter().map(|f| f.transversal.to_vec()).collect();
        assert_eq!(sets, vec![vec![0], vec![1], vec![2], vec![3]]);
        assert!(all.iter().all(|f| f.analysis.quasi_ideal() && f.analysis.multiplicative()));
        let by_generators: Vec<Vec<usize>> =
            search_transversals(&s, 2).unwrap().iter().map(|f| f.transversal.to_vec()).collect();
        assert_eq!(by_generators, sets);
    }

    #[test]
    fn adequate_semigroup_finds_itself() {
        let s = semilattice_chain(4).unwrap();
        let found = search_transversals(&s, 2).unwrap();
        assert_eq!(found.len(), 1);
        let full = found.iter().find(|f| f.transversal.is_full()).expect("S is a transversal of itself");
        assert!(full.analysis.set_l().is_full() && full.analysis.set_r().is_full());
        let b2 = brandt_b2();
        assert!(search_transversals(&b2, 2).unwrap().iter().any(|f| f.transversal.is_full()));
    }

    #[test]
    fn generated_subsemigroups_are_deduplicated() {
        let s = semilattice_chain(3).unwrap();
        let subs: Vec<Vec<usize>> = generated_subsemigroups(&s, 2).iter().map(|c| c.to_vec()).collect();
        assert_eq!(subs, vec![vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 2], vec![1], vec![1, 2], vec![2]]);
    }

    #[test]
    fn power_set_limit() {
        let s = rectangular_band(4, 4).unwrap();
        assert!(matches!(search_all_subsets(&s), Err(TransversalError::PreconditionFailed(_))));
    }
}
