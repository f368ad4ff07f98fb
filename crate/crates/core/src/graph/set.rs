use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

pub(crate) type Words = SmallVec<[u64; 2]>;

#[inline]
pub(crate) fn word_count(order: usize) -> usize {
    order.div_ceil(64)
}

/// A subset of the vertices `0..universe` of some graph, stored as a bitmask.
///
/// Graphs up to 128 vertices keep their sets inline, so the set algebra in
/// the recognizer's inner loops does not allocate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    words: Words,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: SmallVec::from_elem(0, word_count(universe)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = VertexSet {
            universe,
            words: SmallVec::from_elem(!0, word_count(universe)),
        };
        set.trim();
        set
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(v);
        set
    }

    /// Builds a set from vertex indices, rejecting any index `>= universe`.
    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for v in indices {
            if v >= universe {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: universe,
                });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Low `universe` bits of `mask` as a set; only valid for universes of at most 64.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64, "from_mask needs a universe of at most 64");
        let mut set = Self::empty(universe);
        if universe > 0 {
            set.words[0] = mask;
            set.trim();
        }
        set
    }

    pub(crate) fn from_words(universe: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), word_count(universe));
        let mut set = VertexSet {
            universe,
            words: SmallVec::from_slice(words),
        };
        set.trim();
        set
    }

    fn trim(&mut self) {
        let rem = self.universe % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    /// Panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.words[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different universes"
        );
        let mut out = self.clone();
        out.zip_assign(&other.words, f);
        out
    }

    #[inline]
    pub(crate) fn zip_assign(&mut self, other: &[u64], f: impl Fn(u64, u64) -> u64) {
        for (a, &b) in self.words.iter_mut().zip(other) {
            *a = f(*a, b);
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(&a, &b)| a & b == 0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.index * 64 + bit)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
