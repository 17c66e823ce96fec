//! Simple graphs, multigraphs and the cut quantities defined on them.
//!
//! Vertices are dense integers `0..n`. [`Graph`] is simple and keeps its edge
//! list sorted with `u < v`; [`MultiGraph`] keeps edges in insertion order
//! because edge identities matter to the suppression and coupling code.

mod components;
mod cuts;
mod io;
mod vertex_set;

pub use components::{component_labels, components, induced_subgraph, largest_component, Induced};
pub use cuts::{
    bisection_width_exact, cheeger_exact, cr_lower_bound, degree_sum, edge_cut, excess, Bisection, Cheeger,
    BRUTE_FORCE_CAP,
};
pub use io::{read_graph, read_multigraph, write_graph, write_multigraph};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

/// Read access shared by [`Graph`] and [`MultiGraph`].
pub trait EdgeView {
    fn vertex_count(&self) -> usize;

    /// Edges with multiplicity; a loop is `(v, v)`.
    fn edge_list(&self) -> &[(usize, usize)];

    /// Degree of `v`, a loop counting twice.
    fn degree(&self, v: usize) -> usize;
}

/// Compressed adjacency: `targets[offsets[v]..offsets[v + 1]]`.
#[derive(Clone, Debug, Default)]
struct Csr<T> {
    offsets: Vec<usize>,
    targets: Vec<T>,
}

impl<T: Copy + Default> Csr<T> {
    fn build(n: usize, entries: impl Iterator<Item = (usize, T)> + Clone) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for (v, _) in entries.clone() {
            offsets[v + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![T::default(); offsets[n]];
        for (v, t) in entries {
            targets[cursor[v]] = t;
            cursor[v] += 1;
        }
        Csr { offsets, targets }
    }

    fn slice(&self, v: usize) -> &[T] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// A simple undirected graph on `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Csr<usize>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a simple graph, rejecting loops, duplicates and out-of-range
    /// endpoints. Edge orientation and order in the input do not matter.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Range { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::argument(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::argument(format!("duplicate edge {{{}, {}}}", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Like [`Graph::new`] but silently merges duplicate edges.
    pub fn new_dedup<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::Range { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::argument(format!("self-loop at vertex {u}")));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// `edges` must be sorted, normalized (`u < v`), loop-free and unique.
    pub(crate) fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let adj = Csr::build(n, edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]));
        let mut g = Graph { n, edges, adj };
        for v in 0..n {
            let (a, b) = (g.adj.offsets[v], g.adj.offsets[v + 1]);
            g.adj.targets[a..b].sort_unstable();
        }
        g
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_sorted(n, edges)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_sorted(n, edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v)).collect();
        Self::from_sorted(leaves + 1, edges)
    }

    /// `rows x cols` grid, vertex `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Self::new(rows * cols, edges).expect("valid grid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted edges with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        self.adj.slice(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.slice(v).len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Neighbourhood bitmasks; requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64, "bitmask adjacency needs n <= 64");
        (0..self.n).map(|v| self.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect()
    }

    /// Copy with one edge removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let key = (u.min(v), u.max(v));
        let edges = self.edges.iter().copied().filter(|&e| e != key).collect();
        Graph::from_sorted(self.n, edges)
    }
}

impl EdgeView for Graph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn degree(&self, v: usize) -> usize {
        Graph::degree(self, v)
    }
}

/// An undirected multigraph on `0..n` with loops and parallel edges.
///
/// Edges keep their insertion order; edge `i` is `edges()[i]`. Equality is
/// multiset equality of normalized edges.
#[derive(Clone, Debug)]
pub struct MultiGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    /// `(neighbour, edge id)`; a loop appears twice at its vertex.
    adj: Csr<(usize, usize)>,
}

impl MultiGraph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::Range { vertex: u.max(v), n });
        }
        Ok(Self::from_vec(n, edges))
    }

    pub(crate) fn from_vec(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let adj = Csr::build(n, edges.iter().enumerate().flat_map(|(id, &(u, v))| [(u, (v, id)), (v, (u, id))]));
        MultiGraph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbour, edge id)` pairs at `v`; a loop contributes two entries.
    pub fn incidences(&self, v: usize) -> &[(usize, usize)] {
        self.adj.slice(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.slice(v).len()
    }

    pub fn loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// Sum over vertex pairs of `multiplicity - 1`, loops excluded.
    pub fn extra_parallel_count(&self) -> usize {
        let mut pairs: Vec<(usize, usize)> =
            self.edges.iter().filter(|(u, v)| u != v).map(|&(u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        pairs.windows(2).filter(|w| w[0] == w[1]).count()
    }

    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0 && self.extra_parallel_count() == 0
    }

    /// The underlying simple graph, if there are no loops or parallel edges.
    pub fn to_simple(&self) -> Option<Graph> {
        if self.loop_count() > 0 {
            return None;
        }
        Graph::new(self.n, self.edges.iter().copied()).ok()
    }

    /// Edges normalized to `u <= v` and sorted.
    pub fn canonical_edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        e.sort_unstable();
        e
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }
}

impl PartialEq for MultiGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.canonical_edges() == other.canonical_edges()
    }
}

impl Eq for MultiGraph {}

impl From<&Graph> for MultiGraph {
    fn from(g: &Graph) -> Self {
        MultiGraph::from_vec(g.n, g.edges.clone())
    }
}

impl EdgeView for MultiGraph {
    fn vertex_count(&self) -> usize {
        self.n
    }

    fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn degree(&self, v: usize) -> usize {
        MultiGraph::degree(self, v)
    }
}

/// Edge union of two graphs on the same vertex set.
pub fn union_graphs(a: &Graph, b: &Graph) -> Result<Graph> {
    if a.n != b.n {
        return Err(Error::argument(format!("cannot union graphs on {} and {} vertices", a.n, b.n)));
    }
    let mut edges = Vec::with_capacity(a.edges.len() + b.edges.len());
    let (mut i, mut j) = (0, 0);
    while i < a.edges.len() || j < b.edges.len() {
        let next = match (a.edges.get(i), b.edges.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
                *x
            }
            (Some(x), Some(y)) if x < y => {
                i += 1;
                *x
            }
            (Some(x), None) => {
                i += 1;
                *x
            }
            (_, Some(y)) => {
                j += 1;
                *y
            }
            (None, None) => unreachable!(),
        };
        edges.push(next);
    }
    Ok(Graph::from_sorted(a.n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::Argument(_))));
        assert!(matches!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::Argument(_))));
        assert!(matches!(Graph::new(3, [(0, 3)]), Err(Error::Range { vertex: 3, n: 3 })));
    }

    #[test]
    fn neighbours_sorted_and_normalized() {
        let g = Graph::new(4, [(3, 0), (2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert!(g.has_edge(2, 0));
        assert!(!g.has_edge(1, 2));
    }

    #[test]
    fn multigraph_degrees_count_loops_twice() {
        let m = MultiGraph::new(2, [(0, 0), (0, 1), (0, 1)]).unwrap();
        assert_eq!(m.degree(0), 4);
        assert_eq!(m.degree(1), 2);
        assert_eq!(m.loop_count(), 1);
        assert_eq!(m.extra_parallel_count(), 1);
        assert!(m.to_simple().is_none());
    }

    #[test]
    fn multigraph_equality_ignores_order() {
        let a = MultiGraph::new(3, [(0, 1), (2, 1), (1, 1)]).unwrap();
        let b = MultiGraph::new(3, [(1, 1), (1, 2), (1, 0)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn union_is_idempotent_and_has_identity() {
        let g = Graph::cycle(5);
        assert_eq!(union_graphs(&g, &g).unwrap(), g);
        assert_eq!(union_graphs(&g, &Graph::edgeless(5)).unwrap(), g);
        assert!(union_graphs(&g, &Graph::edgeless(4)).is_err());
        let h = Graph::new(5, [(0, 2), (0, 1)]).unwrap();
        assert_eq!(union_graphs(&g, &h).unwrap().edge_count(), 6);
    }
}
