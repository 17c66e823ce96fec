//! Exact tree-width by dynamic programming over vertex subsets.
//!
//! For a set `S` of vertices eliminated first, `TW(S)` is the best possible
//! maximum back-degree so far, and
//! `TW(S) = min_{v in S} max(TW(S - v), Q(S - v, v))`, where `Q(R, v)` counts
//! the vertices outside `R + v` reachable from `v` through `R`. The tree-width
//! is `TW(V)`; the minimising choices give an elimination order, which turns
//! into a tree decomposition.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const TREEWIDTH_CAP: usize = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted bag per tree node.
    pub bags: Vec<Vec<usize>>,
    /// Tree edges between node indices.
    pub edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one (`0` for no bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// Checks the decomposition axioms against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let k = self.bags.len();
        if k == 0 {
            return if g.n() == 0 { Ok(()) } else { Err("no bags".into()) };
        }
        if self.edges.len() != k - 1 {
            return Err(format!("{} nodes but {} edges", k, self.edges.len()));
        }
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.edges {
            if a >= k || b >= k || a == b {
                return Err(format!("bad tree edge ({a}, {b})"));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        if reach(&adj, 0, |_| true).iter().filter(|&&r| r).count() != k {
            return Err("tree is disconnected".into());
        }
        let mut holders = vec![Vec::new(); g.n()];
        for (x, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= g.n() {
                    return Err(format!("bag {x} holds vertex {v} out of range"));
                }
                holders[v].push(x);
            }
        }
        for (v, nodes) in holders.iter().enumerate() {
            let Some(&start) = nodes.first() else {
                return Err(format!("vertex {v} is in no bag"));
            };
            let mut inside = vec![false; k];
            for &x in nodes {
                inside[x] = true;
            }
            let seen = reach(&adj, start, |x| inside[x]);
            if nodes.iter().any(|&x| !seen[x]) {
                return Err(format!("bags holding vertex {v} are not connected"));
            }
        }
        for &(u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok()) {
                return Err(format!("edge ({u}, {v}) is in no bag"));
            }
        }
        Ok(())
    }

    /// One `node: members` line per bag, then one `a b` line per tree edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (x, bag) in self.bags.iter().enumerate() {
            write!(out, "{x}:").unwrap();
            for v in bag {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            writeln!(out, "{a} {b}").unwrap();
        }
        out
    }
}

fn reach(adj: &[Vec<usize>], start: usize, allowed: impl Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] && allowed(y) {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen
}

/// Vertices outside `r + v` reachable from `v` through `r`.
fn back_set(adj: &[u64], r: u64, v: usize) -> u64 {
    let vb = 1u64 << v;
    let mut comp = vb;
    let mut frontier = vb;
    let mut nb = 0u64;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            nb |= adj[u];
        }
        next |= nb & r & !comp;
        comp |= next;
        frontier = next;
    }
    nb & !r & !vb
}

/// Exact tree-width with a witness decomposition. Edgeless graphs have width
/// 0; the empty graph is rejected.
pub fn treewidth_exact(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::domain("tree-width needs at least one vertex"));
    }
    if n > TREEWIDTH_CAP {
        return Err(Error::Capacity { what: "tree-width", n, cap: TREEWIDTH_CAP });
    }
    let adj = g.adjacency_masks();
    let size = 1usize << n;
    let mut tw = vec![u8::MAX; size];
    let mut choice = vec![0u8; size];
    tw[0] = 0;
    for s in 1..size {
        let mut best = u8::MAX;
        let mut arg = 0;
        let mut rest = s as u64;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let r = s & !(1 << v);
            let prev = tw[r];
            if prev >= best {
                continue;
            }
            let q = back_set(&adj, r as u64, v).count_ones() as u8;
            let val = prev.max(q);
            if val < best {
                best = val;
                arg = v as u8;
            }
        }
        tw[s] = best;
        choice[s] = arg;
    }
    let width = tw[size - 1] as usize;

    // choice[V] is eliminated last
    let mut order = Vec::with_capacity(n);
    let mut s = size - 1;
    while s != 0 {
        let v = choice[s] as usize;
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let td = decomposition_from_order(&adj, &order);
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

/// Tree decomposition with one bag per vertex: `v` together with the later
/// vertices it sees once the earlier ones are eliminated.
fn decomposition_from_order(adj: &[u64], order: &[usize]) -> TreeDecomposition {
    let n = order.len();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut roots = Vec::new();
    let mut earlier = 0u64;
    for (i, &v) in order.iter().enumerate() {
        let later = back_set(adj, earlier, v);
        let mut bag: Vec<usize> = VertexSet::from_mask(n, later).iter().collect();
        match bag.iter().min_by_key(|&&u| pos[u]) {
            Some(&u) => edges.push((i, pos[u])),
            None => roots.push(i),
        }
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
        earlier |= 1 << v;
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition { bags, edges }
}
