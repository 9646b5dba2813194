//! Growable bitset over small naturals.
//!
//! Every concept, sample support and hitting-set constraint in the crate is an
//! [`ElementSet`]. Trailing zero words are always trimmed, so derived equality
//! and hashing are extensional.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

const WORD: usize = 64;

/// A finite set of naturals stored as a bitset.
///
/// The derived `Ord` compares the underlying words and exists for use as a map
/// key; use [`ElementSet::lex_cmp`] for the element-sequence order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    pub const fn new() -> Self {
        ElementSet { words: Vec::new() }
    }

    /// The interval `[0, n)`.
    pub fn full(n: u32) -> Self {
        let mut s = ElementSet::new();
        let n = n as usize;
        s.words = alloc::vec![u64::MAX; n / WORD];
        if n % WORD != 0 {
            s.words.push((1u64 << (n % WORD)) - 1);
        }
        s.trim();
        s
    }

    /// The interval `[lo, hi]` (inclusive); empty when `lo > hi`.
    pub fn range_inclusive(lo: u32, hi: u32) -> Self {
        (lo..=hi).collect()
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, x: u32) -> bool {
        let (w, b) = (x as usize / WORD, x as usize % WORD);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, x: u32) -> bool {
        let (w, b) = (x as usize / WORD, x as usize % WORD);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        self.trim();
        present
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        let (w, b) = (x as usize / WORD, x as usize % WORD);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first(&self) -> Option<u32> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<u32> {
        let last = self.words.len().checked_sub(1)?;
        let w = self.words[last];
        Some((last * WORD + (WORD - 1 - w.leading_zeros() as usize)) as u32)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &ElementSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w |= s;
        }
        ElementSet { words }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        let mut s = ElementSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut s = ElementSet {
            words: self
                .words
                .iter()
                .enumerate()
                .map(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0))
                .collect(),
        };
        s.trim();
        s
    }

    pub fn symmetric_difference(&self, other: &ElementSet) -> ElementSet {
        let n = self.words.len().max(other.words.len());
        let mut s = ElementSet {
            words: (0..n)
                .map(|i| {
                    self.words.get(i).copied().unwrap_or(0) ^ other.words.get(i).copied().unwrap_or(0)
                })
                .collect(),
        };
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    /// Elements strictly below `bound`.
    pub fn truncated(&self, bound: u32) -> ElementSet {
        self.intersection(&ElementSet::full(bound))
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Order by sorted element sequence; this is the tie-break order used for
    /// every reported witness.
    pub fn lex_cmp(&self, other: &ElementSet) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<u32> for ElementSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut s = ElementSet::new();
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl<const N: usize> From<[u32; N]> for ElementSet {
    fn from(xs: [u32; N]) -> Self {
        xs.into_iter().collect()
    }
}

impl From<&[u32]> for ElementSet {
    fn from(xs: &[u32]) -> Self {
        xs.iter().copied().collect()
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = u32;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Iter<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        loop {
            if self.cur != 0 {
                let b = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some((self.idx * WORD + b) as u32);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// All subsets of `base` with exactly `k` elements, in lexicographic order of
/// their sorted element sequences.
pub fn subsets_of_size(base: &ElementSet, k: usize) -> Combinations {
    Combinations::new(base.to_vec(), k)
}

pub struct Combinations {
    pool: Vec<u32>,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(pool: Vec<u32>, k: usize) -> Self {
        let done = k > pool.len();
        Combinations {
            pool,
            idx: (0..k).collect(),
            done,
        }
    }
}

impl Iterator for Combinations {
    type Item = ElementSet;

    fn next(&mut self) -> Option<ElementSet> {
        if self.done {
            return None;
        }
        let out: ElementSet = self.idx.iter().map(|&i| self.pool[i]).collect();
        let (n, k) = (self.pool.len(), self.idx.len());
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn trimmed_equality() {
        let mut a = ElementSet::from([1, 200]);
        a.remove(200);
        assert_eq!(a, ElementSet::from([1]));
        assert_eq!(a.last(), Some(1));
    }

    #[test]
    fn basic_algebra() {
        let a = ElementSet::from([0, 1, 64, 65]);
        let b = ElementSet::from([1, 65, 130]);
        assert_eq!(a.intersection(&b).to_vec(), vec![1, 65]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 64]);
        assert_eq!(a.symmetric_difference(&b).to_vec(), vec![0, 64, 130]);
        assert_eq!(a.union(&b).len(), 5);
        assert!(ElementSet::from([1, 65]).is_subset(&a));
        assert!(!b.is_subset(&a));
        assert_eq!(ElementSet::full(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(ElementSet::full(64).len(), 64);
        assert!(ElementSet::range_inclusive(3, 2).is_empty());
    }

    #[test]
    fn combinations_are_lex_ordered() {
        let base = ElementSet::from([2, 5, 7, 9]);
        let all: Vec<_> = subsets_of_size(&base, 2).map(|s| s.to_vec()).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![2, 5]);
        assert_eq!(all[5], vec![7, 9]);
        assert_eq!(subsets_of_size(&base, 0).count(), 1);
        assert_eq!(subsets_of_size(&base, 5).count(), 0);
    }
}
