use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A dense matrix over GF(2), rows packed into `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::new(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        self.data[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        assert!(r < self.rows && c < self.cols, "index ({r}, {c}) out of bounds");
        let w = &mut self.data[r * self.stride + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn count_ones(&self) -> usize {
        self.data.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_weight(&self, r: usize) -> usize {
        self.row(r).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn col_weight(&self, c: usize) -> usize {
        (0..self.rows).filter(|&r| self.get(r, c)).count()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols).map(|c| if self.get(r, c) { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Rank over GF(2) by Gaussian elimination on packed rows.
pub fn gf2_rank(m: &BitMatrix) -> usize {
    if m.stride == 1 {
        return rank_of_words(m.data.iter().copied());
    }
    // Zero rows drop out; if every remaining row is the same, the rank is 1.
    let nonzero: Vec<usize> = (0..m.rows).filter(|&r| m.row(r).iter().any(|&w| w != 0)).collect();
    match nonzero.as_slice() {
        [] => return 0,
        [first, rest @ ..] if rest.iter().all(|&r| m.row(r) == m.row(*first)) => return 1,
        _ => {}
    }
    let stride = m.stride;
    let mut work: Vec<u64> = nonzero.iter().flat_map(|&r| m.row(r)).copied().collect();
    let count = work.len() / stride;
    let mut rank = 0;
    for col in 0..m.cols {
        let (w, bit) = (col / 64, 1u64 << (col % 64));
        let Some(p) = (rank..count).find(|&r| work[r * stride + w] & bit != 0) else {
            continue;
        };
        if p != rank {
            for k in 0..stride {
                work.swap(p * stride + k, rank * stride + k);
            }
        }
        for r in rank + 1..count {
            if work[r * stride + w] & bit != 0 {
                for k in w..stride {
                    work[r * stride + k] ^= work[rank * stride + k];
                }
            }
        }
        rank += 1;
        if rank == count {
            break;
        }
    }
    rank
}

/// Rank over GF(2) of a family of at most 64-bit row vectors.
pub(crate) fn rank_of_words(rows: impl IntoIterator<Item = u64>) -> usize {
    // basis[b] has highest set bit b
    let mut basis = [0u64; 64];
    let mut rank = 0;
    for mut x in rows {
        while x != 0 {
            let b = 63 - x.leading_zeros() as usize;
            if basis[b] == 0 {
                basis[b] = x;
                rank += 1;
                break;
            }
            x ^= basis[b];
        }
    }
    rank
}

/// Cut-rank on masks: rank of the `a` x `!a` adjacency matrix.
pub(crate) fn cutrank_mask(adj: &[u64], a: u64, full: u64) -> usize {
    let b = full & !a;
    if a == 0 || b == 0 {
        return 0;
    }
    let mut rows = Vec::with_capacity(a.count_ones() as usize);
    let mut first = None;
    let mut all_same = true;
    let mut rest = a;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let row = adj[v] & b;
        if row != 0 {
            match first {
                None => first = Some(row),
                Some(f) if f != row => all_same = false,
                _ => {}
            }
            rows.push(row);
        }
    }
    match first {
        None => 0,
        Some(_) if all_same => 1,
        Some(_) => rank_of_words(rows),
    }
}

/// Rank over GF(2) of the `A x B` adjacency matrix of `g`.
pub fn cutrank(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<usize> {
    a.check_within(g.n())?;
    b.check_within(g.n())?;
    if !a.is_disjoint(b) {
        return Err(Error::argument("cut-rank sides overlap"));
    }
    let cols: Vec<usize> = b.iter().collect();
    let mut col_of = vec![usize::MAX; g.n()];
    for (i, &v) in cols.iter().enumerate() {
        col_of[v] = i;
    }
    let mut m = BitMatrix::new(a.len(), cols.len());
    for (r, u) in a.iter().enumerate() {
        for &w in g.neighbors(u) {
            if col_of[w] != usize::MAX {
                m.set(r, col_of[w], true);
            }
        }
    }
    Ok(gf2_rank(&m))
}
