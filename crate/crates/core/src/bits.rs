//! Vertex sets over a dense universe `0..n`.
//!
//! [`VertexSet`] is the public carrier (dynamic words, any `n`). The exact
//! solvers are written once against the crate-private [`Bits`] trait and run
//! on plain `u64` masks when the universe fits in a word.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

/// A subset of `0..universe`.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { universe, words: vec![0; words_for(universe)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet { universe, words: vec![u64::MAX; words_for(universe)] };
        s.trim();
        s
    }

    /// Builds a set from members, rejecting anything outside the universe.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Result<Self> {
        let mut s = VertexSet::new(universe);
        for v in members {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, order: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// The contiguous range `lo..hi`.
    pub fn range(universe: usize, lo: usize, hi: usize) -> Self {
        assert!(lo <= hi && hi <= universe, "range {lo}..{hi} outside 0..{universe}");
        let mut s = VertexSet::new(universe);
        for v in lo..hi {
            s.insert(v);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe, "vertex {v} outside 0..{}", self.universe);
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let had = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        had
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Members<'_> {
        Members { words: &self.words, index: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        debug_assert_eq!(self.universe, other.universe, "vertex sets over different universes");
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        VertexSet { universe: self.universe, words }
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

    pub fn complement(&self) -> Self {
        let mut s = VertexSet { universe: self.universe, words: self.words.iter().map(|w| !w).collect() };
        s.trim();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }
}

pub struct Members<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Members<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + b);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Members<'a>;

    fn into_iter(self) -> Members<'a> {
        self.iter()
    }
}

impl Hash for VertexSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.universe.hash(state);
        self.words.hash(state);
    }
}

/// Lexicographic order on the increasing member sequences.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Set operations shared by the word-packed and dynamic representations.
pub(crate) trait Bits: Clone + Eq + Ord {
    fn empty(universe: usize) -> Self;
    fn full(universe: usize) -> Self;
    fn from_set(set: &VertexSet) -> Self;
    fn to_set(&self, universe: usize) -> VertexSet;
    fn insert(&mut self, v: usize);
    fn remove(&mut self, v: usize);
    fn and(&self, other: &Self) -> Self;
    fn or(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn count(&self) -> usize;
    fn is_empty(&self) -> bool;
    fn first(&self) -> Option<usize>;
    fn ones(&self) -> impl Iterator<Item = usize> + '_;
}

impl Bits for u64 {
    #[inline]
    fn empty(_: usize) -> Self {
        0
    }
    #[inline]
    fn full(universe: usize) -> Self {
        debug_assert!(universe <= WORD);
        if universe == WORD {
            u64::MAX
        } else {
            (1u64 << universe) - 1
        }
    }
    fn from_set(set: &VertexSet) -> Self {
        assert!(set.universe <= WORD, "word-packed set needs universe <= 64");
        set.words.first().copied().unwrap_or(0)
    }
    fn to_set(&self, universe: usize) -> VertexSet {
        let mut s = VertexSet::new(universe);
        if let Some(w) = s.words.first_mut() {
            *w = *self;
        }
        s
    }
    #[inline]
    fn insert(&mut self, v: usize) {
        *self |= 1 << v;
    }
    #[inline]
    fn remove(&mut self, v: usize) {
        *self &= !(1 << v);
    }
    #[inline]
    fn and(&self, other: &Self) -> Self {
        self & other
    }
    #[inline]
    fn or(&self, other: &Self) -> Self {
        self | other
    }
    #[inline]
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }
    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        let mut w = *self;
        core::iter::from_fn(move || {
            (w != 0).then(|| {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                b
            })
        })
    }
}

impl Bits for VertexSet {
    fn empty(universe: usize) -> Self {
        VertexSet::new(universe)
    }
    fn full(universe: usize) -> Self {
        VertexSet::full(universe)
    }
    fn from_set(set: &VertexSet) -> Self {
        set.clone()
    }
    fn to_set(&self, _: usize) -> VertexSet {
        self.clone()
    }
    fn insert(&mut self, v: usize) {
        VertexSet::insert(self, v);
    }
    fn remove(&mut self, v: usize) {
        VertexSet::remove(self, v);
    }
    fn and(&self, other: &Self) -> Self {
        self.intersection(other)
    }
    fn or(&self, other: &Self) -> Self {
        self.union(other)
    }
    fn and_not(&self, other: &Self) -> Self {
        self.difference(other)
    }
    fn count(&self) -> usize {
        self.len()
    }
    fn is_empty(&self) -> bool {
        VertexSet::is_empty(self)
    }
    fn first(&self) -> Option<usize> {
        VertexSet::first(self)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.iter()
    }
}

/// Components of the subgraph induced by `within`, each ordered by its smallest member.
pub(crate) fn components_in<B: Bits>(adj: &[B], within: &B) -> Vec<B> {
    let mut left = within.clone();
    let mut out = Vec::new();
    while let Some(root) = left.first() {
        let mut comp = B::empty(adj.len());
        comp.insert(root);
        let mut frontier = comp.clone();
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let fresh = adj[v].and(&left).and_not(&comp);
            comp = comp.or(&fresh);
            frontier = frontier.or(&fresh);
        }
        left = left.and_not(&comp);
        out.push(comp);
    }
    out
}

/// Open neighbourhood of a set: vertices outside `set` adjacent to it.
pub(crate) fn neighbourhood<B: Bits>(adj: &[B], set: &B) -> B {
    let mut acc = B::empty(adj.len());
    for v in set.ones() {
        acc = acc.or(&adj[v]);
    }
    acc.and_not(set)
}
