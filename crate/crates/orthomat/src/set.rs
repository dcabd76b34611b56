//! Subsets of a finite ground set, stored as packed bit masks.
//!
//! Closure and axiom checks evaluate set operations millions of times, so
//! everything here is word-level: union, intersection and subset tests walk
//! `u64` words, never individual elements.

use std::cmp::Ordering;
use std::fmt;

/// Index of a ground-set element, always `< n` of the owning orthoset.
pub type ElementId = usize;

const WORD_BITS: usize = 64;

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// A subset of `{0, .., n-1}`.
///
/// The universe size `n` travels with the mask; operations on masks from
/// different universes are a logic error and panic in debug builds.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    words: Vec<u64>,
    n: usize,
}

impl SubsetMask {
    /// The empty subset of a ground set of size `n`.
    pub fn empty(n: usize) -> Self {
        SubsetMask {
            words: vec![0; word_count(n)],
            n,
        }
    }

    /// The full ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut mask = SubsetMask::empty(n);
        for (i, w) in mask.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            *w = if lo + WORD_BITS <= n {
                u64::MAX
            } else {
                (1u64 << (n - lo)) - 1
            };
        }
        mask
    }

    pub fn singleton(n: usize, i: ElementId) -> Self {
        let mut mask = SubsetMask::empty(n);
        mask.insert(i);
        mask
    }

    pub fn from_indices(n: usize, indices: &[ElementId]) -> Self {
        let mut mask = SubsetMask::empty(n);
        for &i in indices {
            mask.insert(i);
        }
        mask
    }

    /// Interpret the low `n` bits of `bits` as a subset. Requires `n <= 64`.
    pub fn from_bits_u64(n: usize, bits: u64) -> Self {
        assert!(n <= 64);
        let mut mask = SubsetMask::empty(n);
        if n > 0 {
            let keep = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
            mask.words[0] = bits & keep;
        }
        mask
    }

    /// The low word of the mask; the inverse of [`from_bits_u64`](Self::from_bits_u64).
    pub fn to_bits_u64(&self) -> u64 {
        assert!(self.n <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, i: ElementId) -> bool {
        i < self.n && self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: ElementId) {
        assert!(i < self.n, "element {} out of range for universe {}", i, self.n);
        self.words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
    }

    pub fn remove(&mut self, i: ElementId) {
        assert!(i < self.n);
        self.words[i / WORD_BITS] &= !(1 << (i % WORD_BITS));
    }

    pub fn with(&self, i: ElementId) -> Self {
        let mut out = self.clone();
        out.insert(i);
        out
    }

    pub fn without(&self, i: ElementId) -> Self {
        let mut out = self.clone();
        out.remove(i);
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (w, o) in out.words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        out
    }

    /// Set complement within the universe (not the orthogonal complement).
    pub fn set_complement(&self) -> Self {
        let mut out = SubsetMask::full(self.n);
        for (w, o) in out.words.iter_mut().zip(&self.words) {
            *w &= !o;
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(w, o)| w & !o == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.words.iter().zip(&other.words).all(|(w, o)| w & o == 0)
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<ElementId> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> SetIter<'_> {
        SetIter {
            mask: self,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<ElementId> {
        self.iter().collect()
    }

    /// Canonical order on subsets: by cardinality, then by the sorted element
    /// list lexicographically. Used everywhere a deterministic enumeration or
    /// witness order is promised.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

pub struct SetIter<'a> {
    mask: &'a SubsetMask,
    word_idx: usize,
    current: u64,
}

impl Iterator for SetIter<'_> {
    type Item = ElementId;

    fn next(&mut self) -> Option<ElementId> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.mask.words.len() {
                return None;
            }
            self.current = self.mask.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = SubsetMask::empty(100);
        a.insert(0);
        a.insert(63);
        a.insert(64);
        a.insert(99);
        assert_eq!(a.len(), 4);
        assert!(a.contains(63) && a.contains(64));
        assert!(!a.contains(1));
        assert_eq!(a.to_vec(), vec![0, 63, 64, 99]);

        let full = SubsetMask::full(100);
        assert_eq!(full.len(), 100);
        assert!(a.is_subset(&full));
        assert_eq!(a.set_complement().len(), 96);
        assert!(a.set_complement().is_disjoint(&a));
    }

    #[test]
    fn full_of_word_multiple() {
        let full = SubsetMask::full(64);
        assert_eq!(full.len(), 64);
        assert!(full.contains(63));
        assert_eq!(SubsetMask::full(0).len(), 0);
    }

    #[test]
    fn bits_roundtrip() {
        let m = SubsetMask::from_bits_u64(5, 0b10110);
        assert_eq!(m.to_vec(), vec![1, 2, 4]);
        assert_eq!(m.to_bits_u64(), 0b10110);
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let n = 4;
        let sets = [
            SubsetMask::empty(n),
            SubsetMask::from_indices(n, &[0]),
            SubsetMask::from_indices(n, &[3]),
            SubsetMask::from_indices(n, &[0, 1]),
            SubsetMask::from_indices(n, &[0, 3]),
            SubsetMask::from_indices(n, &[1, 2]),
            SubsetMask::full(n),
        ];
        for w in sets.windows(2) {
            assert_eq!(w[0].canonical_cmp(&w[1]), Ordering::Less);
        }
    }
}
