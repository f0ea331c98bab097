//! Fixed-universe element sets.

use std::cmp::Ordering;
use std::fmt;

/// A subset of the element indices `0..universe` of one algebra.
///
/// Filters, Boolean centers and congruence classes are all carried as
/// `ElementSet`s. Equality compares membership and universe size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    universe: usize,
    words: Vec<u64>,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet { universe, words: vec![0; universe.div_ceil(64)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for i in 0..universe {
            s.insert(i);
        }
        s
    }

    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Self {
        let mut s = Self::empty(universe);
        for m in members {
            s.insert(m);
        }
        s
    }

    pub fn from_predicate(universe: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        Self::from_members(universe, (0..universe).filter(|&i| pred(i)))
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.universe && self.words[x / 64] & (1u64 << (x % 64)) != 0
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        assert!(x < self.universe, "element {x} outside universe {}", self.universe);
        let had = self.contains(x);
        self.words[x / 64] |= 1u64 << (x % 64);
        !had
    }

    pub fn remove(&mut self, x: usize) -> bool {
        let had = self.contains(x);
        if had {
            self.words[x / 64] &= !(1u64 << (x % 64));
        }
        had
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    /// Members in increasing index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe).filter(move |&i| self.contains(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.universe == other.universe && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        ElementSet { universe: self.universe, words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        assert_eq!(self.universe, other.universe);
        ElementSet { universe: self.universe, words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    /// Labels of the members, in index order.
    pub fn labels<'a>(&self, labels: &'a [String]) -> Vec<&'a str> {
        self.iter().map(|i| labels[i].as_str()).collect()
    }
}

/// Cardinality first, then the sorted member lists compared lexicographically.
impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_membership() {
        let mut s = ElementSet::empty(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(129));
        assert_eq!(s.len(), 2);
        assert!(s.contains(129));
        assert!(!s.contains(64));
        assert!(s.remove(0));
        assert_eq!(s.to_vec(), vec![129]);
    }

    #[test]
    fn ordering_is_cardinality_then_lexicographic() {
        let a = ElementSet::from_members(6, [1, 5]);
        let b = ElementSet::from_members(6, [2, 3]);
        let c = ElementSet::from_members(6, [0]);
        let mut v = vec![b.clone(), a.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn subset_and_ops() {
        let a = ElementSet::from_members(5, [1, 4]);
        let b = ElementSet::from_members(5, [1, 2, 4]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(a.union(&b), b);
    }
}
