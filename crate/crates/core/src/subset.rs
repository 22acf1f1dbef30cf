use std::fmt;

use serde::{Deserialize, Serialize};

/// A set of element indices of a semigroup of order `parent_order`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ElementSubset {
    parent_order: usize,
    members: Vec<bool>,
}

impl ElementSubset {
    pub fn empty(parent_order: usize) -> Self {
        ElementSubset {
            parent_order,
            members: vec![false; parent_order],
        }
    }

    pub fn full(parent_order: usize) -> Self {
        ElementSubset {
            parent_order,
            members: vec![true; parent_order],
        }
    }

    /// Builds a subset from indices. Indices outside `[0, parent_order)` are
    /// rejected with `None`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(parent_order: usize, indices: I) -> Option<Self> {
        let mut set = ElementSubset::empty(parent_order);
        for i in indices {
            if i >= parent_order {
                return None;
            }
            set.members[i] = true;
        }
        Some(set)
    }

    pub fn from_predicate(parent_order: usize, pred: impl Fn(usize) -> bool) -> Self {
        ElementSubset {
            parent_order,
            members: (0..parent_order).map(pred).collect(),
        }
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.parent_order && self.members[x]
    }

    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.parent_order, "element {x} outside parent of order {}", self.parent_order);
        !std::mem::replace(&mut self.members[x], true)
    }

    pub fn remove(&mut self, x: usize) -> bool {
        x < self.parent_order && std::mem::replace(&mut self.members[x], false)
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| if m { Some(i) } else { None })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSubset) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    pub fn is_full(&self) -> bool {
        self.members.iter().all(|&m| m)
    }

    pub fn union(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset::from_predicate(self.parent_order, |i| self.contains(i) || other.contains(i))
    }

    pub fn intersection(&self, other: &ElementSubset) -> ElementSubset {
        ElementSubset::from_predicate(self.parent_order, |i| self.contains(i) && other.contains(i))
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_bounds() {
        let s = ElementSubset::from_indices(5, [0, 3]).unwrap();
        assert!(s.contains(3));
        assert!(!s.contains(1));
        assert!(!s.contains(7));
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "{0,3}");
        assert!(ElementSubset::from_indices(2, [2]).is_none());
    }

    #[test]
    fn set_algebra() {
        let a = ElementSubset::from_indices(4, [0, 1]).unwrap();
        let b = ElementSubset::from_indices(4, [1, 2]).unwrap();
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2]);
        assert_eq!(a.intersection(&b).to_vec(), vec![1]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(ElementSubset::full(3).is_full());
        assert!(ElementSubset::empty(3).is_empty());
    }
}
