//! Isomorphism search between small semigroups.
//!
//! Images are chosen for a generating set only, each candidate restricted
//! to elements with the same invariant signature, and the map is extended
//! along right multiplication by generators.

use crate::semigroup::FiniteSemigroup;
use crate::subset::ElementSubset;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Signature {
    idempotent: bool,
    regular: bool,
    right_ideal: usize,
    left_ideal: usize,
    two_sided_ideal: usize,
    cyclic: usize,
    square_idempotent: bool,
}

fn signatures(s: &FiniteSemigroup) -> Vec<Signature> {
    s.elements()
        .map(|x| {
            let right = ElementSubset::from_indices(s.order(), std::iter::once(x).chain(s.row(x).iter().copied()))
                .expect("in range");
            let left = ElementSubset::from_indices(s.order(), std::iter::once(x).chain(s.elements().map(|y| s.mul(y, x))))
                .expect("in range");
            let ideal = ElementSubset::from_indices(
                s.order(),
                left.iter().chain(s.elements().flat_map(|y| left.iter().map(move |z| s.mul(z, y)))),
            )
            .expect("in range");
            let cyclic = s.subsemigroup_closure(&ElementSubset::from_indices(s.order(), [x]).expect("in range"));
            Signature {
                idempotent: s.is_idempotent(x),
                regular: s.is_regular_element(x),
                right_ideal: right.len(),
                left_ideal: left.len(),
                two_sided_ideal: ideal.len(),
                cyclic: cyclic.len(),
                square_idempotent: s.is_idempotent(s.mul(x, x)),
            }
        })
        .collect()
}

/// A generating set picked greedily, rarest signatures first.
fn generators(s: &FiniteSemigroup, sig: &[Signature]) -> Vec<usize> {
    let mut order: Vec<usize> = s.elements().collect();
    order.sort_by_key(|&x| (sig.iter().filter(|t| **t == sig[x]).count(), x));
    let mut gens = Vec::new();
    let mut covered = ElementSubset::empty(s.order());
    for x in order {
        if !covered.contains(x) {
            gens.push(x);
            covered = s.subsemigroup_closure(
                &ElementSubset::from_indices(s.order(), gens.iter().copied()).expect("in range"),
            );
        }
    }
    gens
}

/// Extends an assignment of generator images along right multiplication;
/// `None` on a conflict.
fn extend(a: &FiniteSemigroup, b: &FiniteSemigroup, gens: &[usize], images: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut map = vec![None; a.order()];
    let mut queue = Vec::new();
    for (&g, &h) in gens.iter().zip(images) {
        match map[g] {
            Some(prev) if prev != h => return None,
            Some(_) => {}
            None => {
                map[g] = Some(h);
                queue.push(g);
            }
        }
    }
    while let Some(x) = queue.pop() {
        let hx = map[x].expect("queued elements are mapped");
        for (&g, &h) in gens.iter().zip(images) {
            let (p, q) = (a.mul(x, g), b.mul(hx, h));
            match map[p] {
                Some(prev) if prev != q => return None,
                Some(_) => {}
                None => {
                    map[p] = Some(q);
                    queue.push(p);
                }
            }
        }
    }
    Some(map)
}

/// An isomorphism from `a` onto `b` as an image table, if one exists.
pub fn find_isomorphism(a: &FiniteSemigroup, b: &FiniteSemigroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    let (sa, sb) = (signatures(a), signatures(b));
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    let gens = generators(a, &sa);
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&g| b.elements().filter(|&y| sb[y] == sa[g]).collect()).collect();
    let mut images = Vec::with_capacity(gens.len());
    search(a, b, &gens, &candidates, &mut images)
}

fn search(
    a: &FiniteSemigroup,
    b: &FiniteSemigroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let depth = images.len();
    if depth == gens.len() {
        let map: Vec<usize> = extend(a, b, gens, images)?.into_iter().collect::<Option<Vec<_>>>()?;
        let image = ElementSubset::from_indices(b.order(), map.iter().copied()).expect("in range");
        return (image.is_full() && a.homomorphism_witness(b, &map).is_none()).then_some(map);
    }
    for &y in &candidates[depth] {
        if images.contains(&y) {
            continue;
        }
        images.push(y);
        // prune on the partial assignment
        if extend(a, b, &gens[..=depth], images).is_some() {
            if let Some(found) = search(a, b, gens, candidates, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

pub fn are_isomorphic(a: &FiniteSemigroup, b: &FiniteSemigroup) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{brandt_b2, cyclic_group, full_transformation_monoid, left_zero, rectangular_band, right_zero};

    /// Relabels `s` by the permutation `p` (new index of old element x is p[x]).
    fn permuted(s: &FiniteSemigroup, p: &[usize]) -> FiniteSemigroup {
        let mut inv = vec![0; p.len()];
        for (x, &y) in p.iter().enumerate() {
            inv[y] = x;
        }
        FiniteSemigroup::from_fn(s.order(), |x, y| p[s.mul(inv[x], inv[y])]).unwrap()
    }

    #[test]
    fn finds_relabelled_copies() {
        let t3 = full_transformation_monoid(3).unwrap();
        let p: Vec<usize> = (0..27).map(|x| (x * 5 + 3) % 27).collect();
        let q = permuted(&t3, &p);
        let iso = find_isomorphism(&t3, &q).unwrap();
        assert!(t3.homomorphism_witness(&q, &iso).is_none());

        let b = brandt_b2();
        let q = permuted(&b, &[4, 2, 0, 3, 1]);
        assert!(are_isomorphic(&b, &q));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!are_isomorphic(&left_zero(3).unwrap(), &right_zero(3).unwrap()));
        assert!(!are_isomorphic(&cyclic_group(4).unwrap(), &rectangular_band(2, 2).unwrap()));
        assert!(!are_isomorphic(&rectangular_band(2, 3).unwrap(), &rectangular_band(3, 2).unwrap()));
        // Z4 vs Z2 × Z2: same signatures up to cyclic sizes
        let klein = cyclic_group(2).unwrap().direct_product(&cyclic_group(2).unwrap());
        assert!(!are_isomorphic(&cyclic_group(4).unwrap(), &klein));
    }
}
