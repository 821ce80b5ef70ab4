//! Dense bit-vectors over the non-negative integers and the shift-OR
//! sumset kernel.
//!
//! A [`BitSet`] never stores trailing zero words, so two bit-sets denoting
//! the same finite set are structurally equal.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new() -> Self {
        Self { words: Vec::new() }
    }

    /// All integers in `0..len`.
    pub fn full(len: usize) -> Self {
        let mut words = vec![u64::MAX; len / WORD];
        if !len.is_multiple_of(WORD) {
            words.push((1u64 << (len % WORD)) - 1);
        }
        let mut s = Self { words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| w & (1u64 << (i % WORD)) != 0)
    }

    pub fn insert(&mut self, i: usize) {
        let w = i / WORD;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if let Some(w) = self.words.get_mut(i / WORD) {
            *w &= !(1u64 << (i % WORD));
        }
        self.trim();
    }

    pub fn min(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|k| k * WORD + self.words[k].trailing_zeros() as usize)
    }

    pub fn max(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - last.leading_zeros() as usize))
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + t)
            })
        })
    }

    /// Keeps only members `< len`.
    pub fn truncated(&self, len: usize) -> Self {
        let mut words: Vec<u64> = self.words.iter().take(len.div_ceil(WORD)).copied().collect();
        if !len.is_multiple_of(WORD) {
            if let Some(last) = words.get_mut(len / WORD) {
                *last &= (1u64 << (len % WORD)) - 1;
            }
        }
        let mut s = Self { words };
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &BitSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.trim();
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        self.trim();
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(k, &w)| w & !other.words.get(k).copied().unwrap_or(0) == 0)
    }

    /// `self | (other << shift)`, restricted to members `< limit` when a
    /// limit is given.
    fn or_shifted(&mut self, other: &BitSet, shift: usize, limit: Option<usize>) {
        if other.is_empty() {
            return;
        }
        let word_shift = shift / WORD;
        let bit_shift = shift % WORD;
        let mut needed = other.words.len() + word_shift + 1;
        if let Some(limit) = limit {
            needed = needed.min(limit.div_ceil(WORD));
        }
        if self.words.len() < needed {
            self.words.resize(needed, 0);
        }
        for (k, &w) in other.words.iter().enumerate() {
            let dst = k + word_shift;
            if dst >= needed {
                break;
            }
            self.words[dst] |= w << bit_shift;
            if bit_shift != 0 && dst + 1 < needed {
                self.words[dst + 1] |= w >> (WORD - bit_shift);
            }
        }
    }

    /// Sumset `{a + b}` of the two sets, computed by OR-ing one operand
    /// shifted by every member of the other. Members `>= limit` are dropped
    /// when a limit is given.
    pub fn sumset(&self, other: &BitSet, limit: Option<usize>) -> BitSet {
        let (sparse, dense) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = BitSet::new();
        for s in sparse.iter() {
            if limit.is_some_and(|l| s >= l) {
                break;
            }
            out.or_shifted(dense, s, limit);
        }
        if let Some(l) = limit {
            out = out.truncated(l);
        }
        out.trim();
        out
    }
}

impl FromIterator<usize> for BitSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = BitSet::new();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn naive_sum(a: &[usize], b: &[usize]) -> BTreeSet<usize> {
        a.iter().flat_map(|x| b.iter().map(move |y| x + y)).collect()
    }

    #[test]
    fn insert_remove_trim() {
        let mut s = BitSet::new();
        s.insert(130);
        s.insert(3);
        assert_eq!(s.len(), 2);
        assert_eq!(s.max(), Some(130));
        s.remove(130);
        assert_eq!(s, [3].into_iter().collect());
        assert_eq!(s.min(), Some(3));
    }

    #[test]
    fn full_and_truncated() {
        assert_eq!(BitSet::full(0), BitSet::new());
        assert_eq!(BitSet::full(70).len(), 70);
        let s: BitSet = [1, 63, 64, 65, 200].into_iter().collect();
        assert_eq!(s.truncated(65).iter().collect::<Vec<_>>(), vec![1, 63, 64]);
        assert_eq!(s.truncated(64).iter().collect::<Vec<_>>(), vec![1, 63]);
    }

    #[test]
    fn sumset_across_word_boundaries() {
        let a = [0, 5, 63, 64, 100];
        let b = [0, 1, 62, 127];
        let x: BitSet = a.into_iter().collect();
        let y: BitSet = b.into_iter().collect();
        let got: BTreeSet<usize> = x.sumset(&y, None).iter().collect();
        assert_eq!(got, naive_sum(&a, &b));
        let lim: BTreeSet<usize> = x.sumset(&y, Some(100)).iter().collect();
        assert_eq!(lim, naive_sum(&a, &b).into_iter().filter(|&v| v < 100).collect());
    }

    #[test]
    fn subset_and_difference() {
        let a: BitSet = [1, 2, 70].into_iter().collect();
        let b: BitSet = [1, 2, 3, 70].into_iter().collect();
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        let mut c = b.clone();
        c.difference_with(&a);
        assert_eq!(c, [3].into_iter().collect());
    }
}
