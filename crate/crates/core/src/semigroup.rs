//! Finite semigroups given by their multiplication tables.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::subset::ElementSubset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("a semigroup must have at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    Shape { row: usize, len: usize, expected: usize },
    #[error("table entry {value} at ({row}, {col}) is outside [0, {order})")]
    OutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not associative: ({a}*{b})*{c} = {left} but {a}*({b}*{c}) = {right}")]
    NonAssociative { a: usize, b: usize, c: usize, left: usize, right: usize },
    #[error("{got} labels given for a semigroup of order {order}")]
    LabelCount { got: usize, order: usize },
}

/// A semigroup on the elements `0..order` with a validated, associative
/// multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
    has_adjoined_identity: bool,
}

impl FiniteSemigroup {
    /// Validates a table given row by row; row `a` lists the products `a*b`.
    pub fn validate(rows: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<Self, SemigroupError> {
        let n = rows.len();
        let mut flat = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(SemigroupError::Shape { row, len: r.len(), expected: n });
            }
            flat.extend_from_slice(r);
        }
        Self::from_flat(n, flat, labels)
    }

    /// Validates a row-major flat table of length `order * order`.
    pub fn from_flat(order: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self, SemigroupError> {
        if order == 0 {
            return Err(SemigroupError::Empty);
        }
        if table.len() != order * order {
            return Err(SemigroupError::Shape {
                row: table.len() / order,
                len: table.len() % order,
                expected: order,
            });
        }
        if let Some((idx, &value)) = table.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(SemigroupError::OutOfRange { row: idx / order, col: idx % order, value, order });
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(SemigroupError::LabelCount { got: l.len(), order });
            }
        }
        let s = FiniteSemigroup { order, table, labels, has_adjoined_identity: false };
        s.check_associative()?;
        Ok(s)
    }

    /// Builds a semigroup from a product function, validating the result.
    pub fn from_fn(order: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self, SemigroupError> {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b));
            }
        }
        Self::from_flat(order, table, None)
    }

    fn check_associative(&self) -> Result<(), SemigroupError> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    let left = self.mul(ab, c);
                    let right = self.mul(a, self.mul(b, c));
                    if left != right {
                        return Err(SemigroupError::NonAssociative { a, b, c, left, right });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, SemigroupError> {
        if labels.len() != self.order {
            return Err(SemigroupError::LabelCount { got: labels.len(), order: self.order });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.mul(self.mul(a, b), c)
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).to_vec()).collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn has_adjoined_identity(&self) -> bool {
        self.has_adjoined_identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The two-sided identity, if there is one.
    pub fn identity(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// S¹: returns `self` unchanged when it already has an identity, otherwise
    /// a copy with a new element `order` acting as identity.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        if self.identity().is_some() {
            return self.clone();
        }
        let n = self.order;
        let m = n + 1;
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                table.push(if a == n {
                    b
                } else if b == n {
                    a
                } else {
                    self.mul(a, b)
                });
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push("1".to_string());
            l
        });
        FiniteSemigroup { order: m, table, labels, has_adjoined_identity: true }
    }

    #[inline]
    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    /// E(S).
    pub fn idempotents(&self) -> ElementSubset {
        ElementSubset::from_predicate(self.order, |x| self.is_idempotent(x))
    }

    pub fn is_regular_element(&self, x: usize) -> bool {
        self.elements().any(|y| self.mul3(x, y, x) == x)
    }

    /// Reg(S) = {x : xyx = x for some y}.
    pub fn regular_elements(&self) -> ElementSubset {
        ElementSubset::from_predicate(self.order, |x| self.is_regular_element(x))
    }

    pub fn is_regular(&self) -> bool {
        self.elements().all(|x| self.is_regular_element(x))
    }

    /// V(x) = {y : xyx = x and yxy = y}.
    pub fn inverses_of(&self, x: usize) -> ElementSubset {
        ElementSubset::from_predicate(self.order, |y| self.mul3(x, y, x) == x && self.mul3(y, x, y) == y)
    }

    /// Regular with commuting idempotents.
    pub fn is_inverse(&self) -> bool {
        self.is_regular() && self.idempotents_commute()
    }

    pub fn idempotents_commute(&self) -> bool {
        let e = self.idempotents().to_vec();
        e.iter().all(|&a| e.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_band(&self) -> bool {
        self.elements().all(|x| self.is_idempotent(x))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_closed(&self, subset: &ElementSubset) -> bool {
        self.closure_witness(subset).is_none()
    }

    /// A pair of members whose product leaves the subset.
    pub fn closure_witness(&self, subset: &ElementSubset) -> Option<(usize, usize)> {
        let members = subset.to_vec();
        for &a in &members {
            for &b in &members {
                if !subset.contains(self.mul(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// The subsemigroup generated by `generators`, found breadth first from
    /// the generators in ascending order.
    pub fn subsemigroup_closure(&self, generators: &ElementSubset) -> ElementSubset {
        let gens = generators.to_vec();
        let mut closed = generators.clone();
        let mut queue: VecDeque<usize> = gens.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                for p in [self.mul(x, g), self.mul(g, x)] {
                    if closed.insert(p) {
                        queue.push_back(p);
                    }
                }
            }
        }
        closed
    }

    /// The subset as a standalone semigroup, together with the index maps.
    pub fn restrict(&self, subset: &ElementSubset) -> Result<Restriction, (usize, usize)> {
        if let Some(w) = self.closure_witness(subset) {
            return Err(w);
        }
        let to_parent = subset.to_vec();
        let mut from_parent = vec![None; self.order];
        for (i, &x) in to_parent.iter().enumerate() {
            from_parent[x] = Some(i);
        }
        let m = to_parent.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &to_parent {
            for &b in &to_parent {
                table.push(from_parent[self.mul(a, b)].expect("closed subset"));
            }
        }
        let labels = Some(to_parent.iter().map(|&x| self.label(x)).collect());
        let semigroup = FiniteSemigroup { order: m, table, labels, has_adjoined_identity: false };
        Ok(Restriction { semigroup, to_parent, from_parent })
    }

    /// Direct product; element `(a, b)` has index `a * other.order + b`.
    pub fn direct_product(&self, other: &FiniteSemigroup) -> FiniteSemigroup {
        let m = other.order;
        let n = self.order * m;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let a = self.mul(x / m, y / m);
                let b = other.mul(x % m, y % m);
                table.push(a * m + b);
            }
        }
        let labels = (0..n)
            .map(|x| format!("({},{})", self.label(x / m), other.label(x % m)))
            .collect();
        FiniteSemigroup { order: n, table, labels: Some(labels), has_adjoined_identity: false }
    }

    /// Checks that `map` (indexed by elements of `self`) is a homomorphism
    /// into `target`; returns the first failing pair.
    pub fn homomorphism_witness(&self, target: &FiniteSemigroup, map: &[usize]) -> Option<(usize, usize)> {
        for a in self.elements() {
            for b in self.elements() {
                if map[self.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

/// A closed subset viewed as a semigroup in its own right.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub semigroup: FiniteSemigroup,
    /// Index in the restriction -> index in the parent.
    pub to_parent: Vec<usize>,
    /// Index in the parent -> index in the restriction.
    pub from_parent: Vec<Option<usize>>,
}

impl Restriction {
    pub fn lift(&self, x: usize) -> usize {
        self.to_parent[x]
    }

    pub fn local(&self, x: usize) -> Option<usize> {
        self.from_parent.get(x).copied().flatten()
    }

    /// Maps a subset of the restriction back to the parent.
    pub fn lift_subset(&self, subset: &ElementSubset, parent_order: usize) -> ElementSubset {
        ElementSubset::from_indices(parent_order, subset.iter().map(|x| self.to_parent[x])).expect("in range")
    }

    /// Maps a parent subset (contained in the restriction) into local indices.
    pub fn localize_subset(&self, subset: &ElementSubset) -> Option<ElementSubset> {
        let local: Option<Vec<usize>> = subset.iter().map(|x| self.local(x)).collect();
        ElementSubset::from_indices(self.semigroup.order(), local?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left_zero(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_fn(n, |a, _| a).unwrap()
    }

    #[test]
    fn trivial_and_left_zero_validate() {
        let t = FiniteSemigroup::validate(&[vec![0]], None).unwrap();
        assert_eq!(t.order(), 1);
        let lz = FiniteSemigroup::validate(&[vec![0, 0], vec![1, 1]], None).unwrap();
        assert_eq!(lz.order(), 2);
        assert!(lz.is_band());
    }

    #[test]
    fn validation_errors() {
        assert_eq!(FiniteSemigroup::validate(&[], None), Err(SemigroupError::Empty));
        assert!(matches!(
            FiniteSemigroup::validate(&[vec![0, 2], vec![1, 1]], None),
            Err(SemigroupError::OutOfRange { row: 0, col: 1, value: 2, .. })
        ));
        assert!(matches!(
            FiniteSemigroup::validate(&[vec![0, 1], vec![1]], None),
            Err(SemigroupError::Shape { row: 1, .. })
        ));
        // Z3 with one corrupted entry; the oracle scans all triples itself
        let mut t = [[0usize, 1, 2], [1, 2, 0], [2, 0, 1]];
        t[1][1] = 0;
        let first = (0..3)
            .flat_map(|a| (0..3).flat_map(move |b| (0..3).map(move |c| (a, b, c))))
            .find(|&(a, b, c)| t[t[a][b]][c] != t[a][t[b][c]])
            .unwrap();
        let rows: Vec<Vec<usize>> = t.iter().map(|r| r.to_vec()).collect();
        match FiniteSemigroup::validate(&rows, None) {
            Err(SemigroupError::NonAssociative { a, b, c, left, right }) => {
                assert_eq!((a, b, c), first);
                assert_eq!(left, t[t[a][b]][c]);
                assert_eq!(right, t[a][t[b][c]]);
            }
            other => panic!("expected NonAssociative, got {other:?}"),
        }
    }

    #[test]
    fn adjoin_identity_cases() {
        let t = FiniteSemigroup::validate(&[vec![0]], None).unwrap();
        assert_eq!(t.adjoin_identity(), t);
        let lz = left_zero(2);
        let m = lz.adjoin_identity();
        assert_eq!(m.order(), 3);
        assert!(m.has_adjoined_identity());
        assert_eq!(m.identity(), Some(2));
        assert_eq!(m.adjoin_identity(), m);
        // meet semilattice 0 < 1
        let sl = FiniteSemigroup::from_fn(2, |a, b| a.min(b)).unwrap();
        assert_eq!(sl.adjoin_identity(), sl);
    }

    #[test]
    fn idempotents_and_regularity() {
        let z2 = FiniteSemigroup::from_fn(2, |a, b| (a + b) % 2).unwrap();
        assert_eq!(z2.idempotents().to_vec(), vec![0]);
        assert_eq!(z2.inverses_of(1).to_vec(), vec![1]);
        // <a | a^3 = a^2>: 0 = a, 1 = a^2
        let mono = FiniteSemigroup::from_fn(2, |_, _| 1).unwrap();
        assert_eq!(mono.regular_elements().to_vec(), vec![1]);
        let rb = FiniteSemigroup::from_fn(4, |a, b| (a / 2) * 2 + b % 2).unwrap();
        for x in rb.elements() {
            assert!(rb.inverses_of(x).is_full());
        }
    }

    #[test]
    fn closure_and_restriction() {
        let mono = FiniteSemigroup::from_fn(2, |_, _| 1).unwrap();
        let big = mono.direct_product(&FiniteSemigroup::from_fn(1, |_, _| 0).unwrap());
        let a = ElementSubset::from_indices(2, [0]).unwrap();
        assert_eq!(big.subsemigroup_closure(&a).to_vec(), vec![0, 1]);
        let e = ElementSubset::from_indices(2, [1]).unwrap();
        assert_eq!(mono.subsemigroup_closure(&e).to_vec(), vec![1]);
        let r = mono.restrict(&e).unwrap();
        assert_eq!(r.semigroup.order(), 1);
        assert_eq!(r.lift(0), 1);
        assert_eq!(r.local(0), None);
        assert!(mono.restrict(&a).is_err());
    }
}
