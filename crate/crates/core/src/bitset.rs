//! Small dense sets used for automaton states and Streett pair indices.

use alloc::vec::Vec;
use core::fmt;

const WORD: usize = 64;

/// A set of automaton states stored as a bit vector.
///
/// Trailing zero words are never stored, so structural equality, ordering
/// and hashing coincide with set equality.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateSet {
    words: Vec<u64>,
}

impl StateSet {
    pub const fn new() -> Self {
        StateSet { words: Vec::new() }
    }

    pub fn singleton(state: usize) -> Self {
        let mut set = StateSet::new();
        set.insert(state);
        set
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn contains(&self, state: usize) -> bool {
        self.words
            .get(state / WORD)
            .is_some_and(|w| w & (1 << (state % WORD)) != 0)
    }

    pub fn insert(&mut self, state: usize) -> bool {
        let idx = state / WORD;
        if idx >= self.words.len() {
            self.words.resize(idx + 1, 0);
        }
        let bit = 1 << (state % WORD);
        let fresh = self.words[idx] & bit == 0;
        self.words[idx] |= bit;
        fresh
    }

    pub fn remove(&mut self, state: usize) -> bool {
        let idx = state / WORD;
        let Some(word) = self.words.get_mut(idx) else {
            return false;
        };
        let bit = 1 << (state % WORD);
        let present = *word & bit != 0;
        *word &= !bit;
        self.trim();
        present
    }

    pub fn union_with(&mut self, other: &StateSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &StateSet) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.trim();
    }

    pub fn difference_with(&mut self, other: &StateSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        self.trim();
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &StateSet) -> StateSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &StateSet) -> StateSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    /// Largest element plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(w) => (self.words.len() - 1) * WORD + (WORD - w.leading_zeros() as usize),
        }
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    idx: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.idx * WORD + bit);
            }
            self.idx += 1;
            self.current = *self.words.get(self.idx)?;
        }
    }
}

impl<'a> IntoIterator for &'a StateSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl FromIterator<usize> for StateSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = StateSet::new();
        for s in iter {
            set.insert(s);
        }
        set
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A set of Streett pair indices drawn from `1..=63`.
///
/// Index 0 never belongs to a set; it stands for "no pair" when an edge of a
/// Streett Safra tree does not drop an index.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairSet(u64);

impl PairSet {
    pub const MAX_INDEX: usize = 63;

    pub const EMPTY: PairSet = PairSet(0);

    /// The set `{1, .., k}`.
    pub fn upto(k: usize) -> Self {
        assert!(k <= Self::MAX_INDEX, "pair index {k} out of range");
        PairSet(((1u128 << (k + 1)) - 2) as u64)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, j: usize) -> bool {
        (1..=Self::MAX_INDEX).contains(&j) && self.0 & (1 << j) != 0
    }

    /// Removes `j`; removing 0 is a no-op.
    pub fn without(self, j: usize) -> Self {
        if j == 0 {
            self
        } else {
            PairSet(self.0 & !(1 << j))
        }
    }

    pub fn with(self, j: usize) -> Self {
        assert!(
            (1..=Self::MAX_INDEX).contains(&j),
            "pair index {j} out of range"
        );
        PairSet(self.0 | (1 << j))
    }

    /// Largest member, or 0 when empty.
    pub fn max(self) -> usize {
        if self.0 == 0 {
            0
        } else {
            63 - self.0.leading_zeros() as usize
        }
    }

    /// Largest member strictly below `j`, or 0 when there is none.
    pub fn max_below(self, j: usize) -> usize {
        let mask = if j == 0 { 0 } else { (1u64 << j.min(63)) - 1 };
        PairSet(self.0 & mask).max()
    }

    pub fn is_subset(self, other: PairSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn difference(self, other: PairSet) -> PairSet {
        PairSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn iter(self) -> impl DoubleEndedIterator<Item = usize> {
        (1..=Self::MAX_INDEX).filter(move |&j| self.contains(j))
    }
}

impl fmt::Debug for PairSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
