//! Fixed-capacity vertex subsets with O(1) membership.
//!
//! Every table in the solvers is keyed by a `VertexSet`, so the type is a
//! plain `Copy` bitset: four machine words, good for graphs of up to 256
//! vertices. Two sets with equal membership compare and hash equal.

use std::fmt;

const WORDS: usize = 4;

/// A subset of the vertex ids `0..256`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    /// Largest vertex id plus one that a set can hold.
    pub const CAPACITY: usize = WORDS * 64;

    pub const EMPTY: VertexSet = VertexSet { words: [0; WORDS] };

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(v);
        s
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY, "vertex count {n} exceeds VertexSet capacity");
        let mut s = Self::EMPTY;
        for w in 0..WORDS {
            let lo = w * 64;
            if n >= lo + 64 {
                s.words[w] = u64::MAX;
            } else if n > lo {
                s.words[w] = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < Self::CAPACITY);
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < Self::CAPACITY);
        self.words[v / 64] &= !(1u64 << (v % 64));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < Self::CAPACITY && self.words[v / 64] & (1u64 << (v % 64)) != 0
    }

    #[inline]
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
        out
    }

    /// Elements of `self` not in `other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = *self;
        for (a, b) in out.words.iter_mut().zip(other.words.iter()) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & b == 0)
    }

    /// Smallest member, if any.
    pub fn min_vertex(&self) -> Option<usize> {
        for (w, &word) in self.words.iter().enumerate() {
            if word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter { set: *self, word: 0, rest: self.words[0] }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Ascending-vertex iterator.
pub struct Iter {
    set: VertexSet,
    word: usize,
    rest: u64,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.rest != 0 {
                let bit = self.rest.trailing_zeros() as usize;
                self.rest &= self.rest - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= WORDS {
                return None;
            }
            self.rest = self.set.words[self.word];
        }
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

// Lexicographic order on the ascending member listing (a proper prefix
// sorts first).
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_len() {
        let s: VertexSet = [3, 70, 255].into_iter().collect();
        assert!(s.contains(3) && s.contains(70) && s.contains(255));
        assert!(!s.contains(4) && !s.contains(256));
        assert_eq!(s.len(), 3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 70, 255]);
        assert_eq!(s.min_vertex(), Some(3));
    }

    #[test]
    fn equal_membership_compares_and_hashes_equal() {
        use std::collections::hash_map::DefaultHasher;
        use std::hash::{Hash, Hasher};
        let a: VertexSet = [5, 9, 130].into_iter().collect();
        let b: VertexSet = [130, 5, 9, 9].into_iter().collect();
        assert_eq!(a, b);
        let hash = |s: &VertexSet| {
            let mut h = DefaultHasher::new();
            s.hash(&mut h);
            h.finish()
        };
        assert_eq!(hash(&a), hash(&b));
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0, 1, 64].into_iter().collect();
        let b: VertexSet = [1, 64, 65].into_iter().collect();
        assert_eq!(a.union(&b), [0, 1, 64, 65].into_iter().collect());
        assert_eq!(a.intersection(&b), [1, 64].into_iter().collect());
        assert_eq!(a.difference(&b), VertexSet::singleton(0));
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_disjoint(&b));
        assert!(VertexSet::EMPTY.is_disjoint(&a));
    }

    #[test]
    fn full_set_boundaries() {
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(256).len(), 256);
    }

    #[test]
    fn ascending_listing_order() {
        let s01: VertexSet = [0, 1].into_iter().collect();
        let s02: VertexSet = [0, 2].into_iter().collect();
        let s12: VertexSet = [1, 2].into_iter().collect();
        let s0: VertexSet = VertexSet::singleton(0);
        assert!(s0 < s01); // shorter prefix first
        assert!(s01 < s02);
        assert!(s02 < s12);
    }
}
