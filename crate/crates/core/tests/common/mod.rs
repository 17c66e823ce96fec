#![allow(dead_code)]

use proptest::prelude::*;
use widthlab::{Graph, MultiGraph};

/// Simple graph on `lo..=hi` vertices, each pair present independently.
pub fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Multigraph with loops and parallel edges allowed.
pub fn multigraph(lo: usize, hi: usize, max_edges: usize) -> impl Strategy<Value = MultiGraph> {
    (lo..=hi).prop_flat_map(move |n| {
        proptest::collection::vec((0..n, 0..n), 0..=max_edges).prop_map(move |edges| MultiGraph::new(n, edges).unwrap())
    })
}

/// Uniform-ish labelled tree: vertex `i > 0` attaches to a random earlier vertex.
pub fn tree(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|m| {
        proptest::collection::vec(any::<prop::sample::Index>(), m - 1).prop_map(move |picks| {
            let edges: Vec<(usize, usize)> = picks.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            Graph::new(m, edges).unwrap()
        })
    })
}

/// Rank over GF(2) of boolean rows by plain elimination.
pub fn naive_rank(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank && rows[r][c] {
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Cut-rank of `(side, complement)` from the adjacency matrix, via `naive_rank`.
pub fn naive_cutrank(g: &Graph, side: &[bool]) -> usize {
    let a: Vec<usize> = (0..g.n()).filter(|&v| side[v]).collect();
    let b: Vec<usize> = (0..g.n()).filter(|&v| !side[v]).collect();
    let rows = a.iter().map(|&u| b.iter().map(|&w| g.has_edge(u, w)).collect()).collect();
    naive_rank(rows)
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Sizes of the components of the subgraph induced by `keep`.
pub fn components_by_flood(g: &Graph, keep: &[bool]) -> Vec<usize> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if !keep[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &w in g.neighbors(v) {
                if keep[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}
