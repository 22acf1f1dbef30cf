use std::collections::HashMap;
use std::hash::Hash;

use crate::subset::ElementSubset;

/// An equivalence relation on `[0, parent_order)`.
///
/// Class ids are assigned in order of the smallest member, so two relations
/// describe the same partition exactly when their `class_of` vectors agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivRelation {
    class_of: Vec<usize>,
    classes: Vec<ElementSubset>,
}

impl EquivRelation {
    /// Groups elements by an arbitrary key.
    pub fn from_keys<K: Hash + Eq>(keys: impl IntoIterator<Item = K>) -> Self {
        let mut ids: HashMap<K, usize> = HashMap::new();
        let class_of: Vec<usize> = keys
            .into_iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect();
        Self::from_class_of(class_of)
    }

    /// Builds the relation from a pairwise predicate. The predicate is assumed
    /// to be an equivalence; only comparisons against class representatives
    /// are made.
    pub fn from_pairwise(order: usize, mut related: impl FnMut(usize, usize) -> bool) -> Self {
        let mut reps: Vec<usize> = Vec::new();
        let mut class_of = Vec::with_capacity(order);
        for a in 0..order {
            match reps.iter().position(|&r| related(r, a)) {
                Some(c) => class_of.push(c),
                None => {
                    class_of.push(reps.len());
                    reps.push(a);
                }
            }
        }
        Self::from_class_of(class_of)
    }

    fn from_class_of(raw: Vec<usize>) -> Self {
        let order = raw.len();
        // renumber by first occurrence
        let mut renumber: HashMap<usize, usize> = HashMap::new();
        let class_of: Vec<usize> = raw
            .iter()
            .map(|c| {
                let next = renumber.len();
                *renumber.entry(*c).or_insert(next)
            })
            .collect();
        let mut classes = vec![ElementSubset::empty(order); renumber.len()];
        for (x, &c) in class_of.iter().enumerate() {
            classes[c].insert(x);
        }
        EquivRelation { class_of, classes }
    }

    pub fn parent_order(&self) -> usize {
        self.class_of.len()
    }

    #[inline]
    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    #[inline]
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn classes(&self) -> &[ElementSubset] {
        &self.classes
    }

    pub fn class_containing(&self, x: usize) -> &ElementSubset {
        &self.classes[self.class_of[x]]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// True when every pair related here is related in `other`.
    pub fn is_finer_than(&self, other: &EquivRelation) -> bool {
        self.classes.iter().all(|c| {
            let mut it = c.iter();
            let first = it.next().expect("classes are nonempty");
            it.all(|x| other.related(first, x))
        })
    }

    /// The relation restricted to the elements of `subset`, renumbered by
    /// their position in ascending order.
    pub fn restrict(&self, subset: &ElementSubset) -> EquivRelation {
        EquivRelation::from_keys(subset.iter().map(|x| self.class_of[x]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_numbering() {
        let a = EquivRelation::from_keys(["x", "y", "x", "z"]);
        let b = EquivRelation::from_pairwise(4, |p, q| (p == q) || (p + q == 2 && p != 1));
        assert_eq!(a, b);
        assert_eq!(a.num_classes(), 3);
        assert!(a.related(0, 2));
        assert_eq!(a.class_containing(3).to_vec(), vec![3]);
    }

    #[test]
    fn refinement() {
        let fine = EquivRelation::from_keys([0, 1, 2, 3]);
        let coarse = EquivRelation::from_keys([0, 0, 1, 1]);
        assert!(fine.is_finer_than(&coarse));
        assert!(!coarse.is_finer_than(&fine));
        let sub = ElementSubset::from_indices(4, [1, 2, 3]).unwrap();
        assert_eq!(coarse.restrict(&sub), EquivRelation::from_keys([0, 1, 1]));
    }
}
