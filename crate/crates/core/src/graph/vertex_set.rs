use std::fmt;

use crate::error::{Error, Result};

/// A subset of `0..universe`, stored as a dense bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { universe, words: vec![0; universe.div_ceil(64)] }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from indices, rejecting any index `>= universe`.
    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::new(universe);
        for v in indices {
            if v >= universe {
                return Err(Error::Range { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Set whose members are the one-bits of `mask` (universe at most 64).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64, "mask sets hold at most 64 vertices");
        let mut s = Self::new(universe);
        if universe > 0 {
            let keep = if universe == 64 { u64::MAX } else { (1u64 << universe) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    /// The members as a bit mask; only valid when every member is below 64.
    pub fn to_mask(&self) -> u64 {
        debug_assert!(self.iter().all(|v| v < 64));
        self.words.first().copied().unwrap_or(0)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn complement(&self) -> Self {
        let mut s = Self::new(self.universe);
        for v in 0..self.universe {
            if !self.contains(v) {
                s.insert(v);
            }
        }
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let universe = self.universe.max(other.universe);
        let mut s = Self::new(universe);
        for v in self.iter().chain(other.iter()) {
            s.insert(v);
        }
        s
    }

    /// Largest member, if any.
    pub fn max(&self) -> Option<usize> {
        self.iter().last()
    }

    /// Errors with the first member `>= n`.
    pub(crate) fn check_within(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(v) if v >= n => Err(Error::Range { vertex: v, n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
