//! Exact rank-width by dynamic programming over vertex subsets.
//!
//! With `rho(X)` the cut-rank of `(X, V - X)`, let `f({v}) = 0` and
//! `f(S) = min max(f(S1), f(S2), rho(S1), rho(S2))` over splits of `S` into
//! two nonempty parts. A split of `V` into `A` and `B` joined by one tree edge
//! then gives `rw = min max(rho(A), f(A), f(B))`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::width::bitmatrix::cutrank_mask;

pub const RANKWIDTH_CAP: usize = 12;

/// A subcubic tree given by a parent array, with graph vertex `v` sitting at
/// leaf `leaf[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDecomposition {
    pub parent: Vec<Option<usize>>,
    pub leaf: Vec<usize>,
}

impl RankDecomposition {
    pub fn node_count(&self) -> usize {
        self.parent.len()
    }

    /// Tree edges `(child, parent)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parent.iter().enumerate().filter_map(|(c, p)| p.map(|p| (c, p)))
    }

    /// Graph vertices below each node, as masks (`n <= 64`).
    fn below(&self) -> Vec<u64> {
        let k = self.node_count();
        let mut below = vec![0u64; k];
        for (v, &x) in self.leaf.iter().enumerate() {
            below[x] |= 1 << v;
        }
        // children before parents: process nodes by decreasing depth
        let mut depth = vec![0usize; k];
        for (x, slot) in depth.iter_mut().enumerate() {
            let mut d = 0;
            let mut y = x;
            while let Some(p) = self.parent[y] {
                d += 1;
                y = p;
                if d > k {
                    break;
                }
            }
            *slot = d;
        }
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&x| std::cmp::Reverse(depth[x]));
        for x in order {
            if let Some(p) = self.parent[x] {
                below[p] |= below[x];
            }
        }
        below
    }

    /// Largest cut-rank over tree edges.
    pub fn width(&self, g: &Graph) -> usize {
        let adj = g.adjacency_masks();
        let full = full_mask(g.n());
        self.below()
            .iter()
            .zip(&self.parent)
            .filter(|(_, p)| p.is_some())
            .map(|(&x, _)| cutrank_mask(&adj, x, full))
            .max()
            .unwrap_or(0)
    }

    /// Checks that the tree is subcubic with the graph's vertices in
    /// bijection with its leaves, and that its width is `claimed`.
    pub fn validate(&self, g: &Graph, claimed: usize) -> std::result::Result<(), String> {
        let n = g.n();
        let k = self.node_count();
        if self.leaf.len() != n {
            return Err(format!("leaf map covers {} of {n} vertices", self.leaf.len()));
        }
        if n == 0 {
            return if k == 0 { Ok(()) } else { Err("nodes without vertices".into()) };
        }
        if self.parent.iter().filter(|p| p.is_none()).count() != 1 {
            return Err("need exactly one root".into());
        }
        for x in 0..k {
            let mut y = x;
            let mut steps = 0;
            while let Some(p) = self.parent[y] {
                if p >= k {
                    return Err(format!("node {y} has parent {p} out of range"));
                }
                y = p;
                steps += 1;
                if steps > k {
                    return Err("parent pointers contain a cycle".into());
                }
            }
        }
        let mut deg = vec![0usize; k];
        for (c, p) in self.edges() {
            deg[c] += 1;
            deg[p] += 1;
        }
        let mut leaf_owner = vec![None; k];
        for (v, &x) in self.leaf.iter().enumerate() {
            if x >= k {
                return Err(format!("vertex {v} mapped to missing node {x}"));
            }
            if let Some(u) = leaf_owner[x] {
                return Err(format!("vertices {u} and {v} share leaf {x}"));
            }
            leaf_owner[x] = Some(v);
        }
        for x in 0..k {
            let is_leaf = if n == 1 { deg[x] == 0 } else { deg[x] == 1 };
            if is_leaf != leaf_owner[x].is_some() {
                return Err(format!("node {x} of degree {} breaks the leaf map", deg[x]));
            }
            if !is_leaf && deg[x] != 3 {
                return Err(format!("inner node {x} has degree {}", deg[x]));
            }
        }
        let w = self.width(g);
        if w != claimed {
            return Err(format!("width is {w}, claimed {claimed}"));
        }
        Ok(())
    }

    /// A tree edge whose sides both hold at least `ceil(n / 3)` vertices,
    /// returned as the two sides.
    pub fn balanced_split(&self, n: usize) -> Option<(VertexSet, VertexSet)> {
        let need = n.div_ceil(3) as u32;
        let full = full_mask(n);
        self.below()
            .iter()
            .zip(&self.parent)
            .filter(|(_, p)| p.is_some())
            .map(|(&x, _)| x)
            .find(|&x| x.count_ones() >= need && (full & !x).count_ones() >= need)
            .map(|x| (VertexSet::from_mask(n, x), VertexSet::from_mask(n, full & !x)))
    }

    /// `nodes K`, then `node parent` per node (`-1` for the root), then
    /// `leaves n`, then `vertex node` per graph vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("nodes {}\n", self.node_count());
        for (x, p) in self.parent.iter().enumerate() {
            match p {
                Some(p) => writeln!(out, "{x} {p}").unwrap(),
                None => writeln!(out, "{x} -1").unwrap(),
            }
        }
        writeln!(out, "leaves {}", self.leaf.len()).unwrap();
        for (v, x) in self.leaf.iter().enumerate() {
            writeln!(out, "{v} {x}").unwrap();
        }
        out
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

struct Builder<'a> {
    split: &'a [u16],
    parent: Vec<Option<usize>>,
    leaf: Vec<usize>,
}

impl Builder<'_> {
    fn build(&mut self, s: usize) -> usize {
        let x = self.parent.len();
        self.parent.push(None);
        if s.count_ones() == 1 {
            self.leaf[s.trailing_zeros() as usize] = x;
        } else {
            let s1 = self.split[s] as usize;
            for part in [s1, s & !s1] {
                let c = self.build(part);
                self.parent[c] = Some(x);
            }
        }
        x
    }
}

/// Exact rank-width with a witness decomposition; graphs with at most one
/// vertex have rank-width 0.
pub fn rankwidth_exact(g: &Graph) -> Result<(usize, RankDecomposition)> {
    let n = g.n();
    if n > RANKWIDTH_CAP {
        return Err(Error::Capacity { what: "rank-width", n, cap: RANKWIDTH_CAP });
    }
    if n <= 1 {
        return Ok((0, RankDecomposition { parent: vec![None; n], leaf: (0..n).collect() }));
    }
    let adj = g.adjacency_masks();
    let size = 1usize << n;
    let full = (size - 1) as u64;
    let rho: Vec<u8> = (0..size).map(|x| cutrank_mask(&adj, x as u64, full) as u8).collect();
    let mut f = vec![0u8; size];
    let mut split = vec![0u16; size];
    for s in 1..size {
        if s.count_ones() == 1 {
            continue;
        }
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut best = u8::MAX;
        let mut arg = 0;
        // s1 = low + any proper submask of rest, so both parts are nonempty
        let mut sub = rest;
        loop {
            sub = (sub.wrapping_sub(1)) & rest;
            let s1 = low | sub;
            let s2 = s & !s1;
            let val = f[s1].max(f[s2]).max(rho[s1]).max(rho[s2]);
            if val < best {
                best = val;
                arg = s1;
            }
            if sub == 0 {
                break;
            }
        }
        f[s] = best;
        split[s] = arg as u16;
    }
    let v = size - 1;
    let mut best = u8::MAX;
    let mut root_a = 0;
    let mut sub = v & !1;
    loop {
        sub = (sub.wrapping_sub(1)) & (v & !1);
        let a = 1 | sub;
        let b = v & !a;
        let val = rho[a].max(f[a]).max(f[b]);
        if val < best {
            best = val;
            root_a = a;
        }
        if sub == 0 {
            break;
        }
    }
    let mut builder = Builder { split: &split, parent: Vec::with_capacity(2 * n - 2), leaf: vec![0; n] };
    let top_b = builder.build(v & !root_a);
    let top_a = builder.build(root_a);
    builder.parent[top_a] = Some(top_b);
    let dec = RankDecomposition { parent: builder.parent, leaf: builder.leaf };
    Ok((best as usize, dec))
}
