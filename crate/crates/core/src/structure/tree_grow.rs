//! Restricted breadth-first growth of a large tree of bounded degree.
//!
//! The procedure first tries to build a partial binary tree of order `n1`
//! (root of degree two, every other vertex of degree three or one, leaves on
//! the last two levels). Vertices touched by a failed attempt stay used, and
//! a failed attempt additionally discards enough unused vertices to account
//! for `n1` vertices in total. From a successful attempt the tree grows level
//! by level: each current leaf adopts up to `k_cap` unused neighbours as
//! children. Growth stops once the tree has `ceil(delta * n / 8)` vertices or
//! no leaf can be extended. In the second case the tree's vertices stay used
//! and attempts resume; when they run out, the largest tree grown is
//! returned.
//!
//! Every choice is the lowest-index candidate, except the order in which
//! attempt roots are tried, which is a seeded permutation of the vertices.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::random::Seed;

/// Cap on the default number of initial attempts.
pub const MAX_DEFAULT_ATTEMPTS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TreeGrowthParams {
    /// Supercriticality; sets the child cap and the target size.
    pub delta: f64,
    /// At most this many children per vertex.
    pub k_cap: usize,
    /// Order of the initial partial binary tree (odd, at least 5).
    pub n1: usize,
    /// Number of initial attempts before giving up.
    pub attempts: usize,
}

impl TreeGrowthParams {
    /// Defaults for a graph on `n` vertices: `k_cap = ceil(4 ln(1/delta))`,
    /// `n1 = ceil(4 ln ln ln n + 1)` rounded up to an odd number and at least
    /// 5, `attempts = ceil(gamma^-n1 * n1)` capped at
    /// [`MAX_DEFAULT_ATTEMPTS`], where `1 - gamma = (2 + 3 delta / 4) e^(-1 - delta / 2)`
    /// bounds the chance that an exposed vertex has fewer than two children.
    pub fn new(delta: f64, n: usize) -> Result<Self> {
        if !(delta > 0.0 && delta < 1.0) {
            return Err(Error::argument(format!("delta = {delta} must lie in (0, 1)")));
        }
        let k_cap = ((4.0 * (1.0 / delta).ln()).ceil() as usize).max(2);
        let triple_log = (n as f64).ln().ln().ln();
        let raw = if triple_log.is_finite() { (4.0 * triple_log + 1.0).ceil().max(0.0) as usize } else { 0 };
        let mut n1 = raw.max(5);
        if n1 % 2 == 0 {
            n1 += 1;
        }
        let gamma = 1.0 - (2.0 + 0.75 * delta) * (-1.0 - delta / 2.0).exp();
        let attempts = (gamma.powi(-(n1 as i32)) * n1 as f64).ceil();
        let attempts = if attempts.is_finite() {
            (attempts as usize).clamp(1, MAX_DEFAULT_ATTEMPTS)
        } else {
            MAX_DEFAULT_ATTEMPTS
        };
        Ok(TreeGrowthParams { delta, k_cap, n1, attempts })
    }

    pub fn with_k_cap(mut self, k_cap: usize) -> Self {
        self.k_cap = k_cap;
        self
    }

    fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::argument(format!("delta = {} must lie in (0, 1)", self.delta)));
        }
        if self.k_cap < 2 {
            return Err(Error::argument("child cap must be at least 2"));
        }
        if self.n1 < 5 || self.n1.is_multiple_of(2) {
            return Err(Error::argument(format!("initial tree order {} must be odd and at least 5", self.n1)));
        }
        if self.attempts == 0 {
            return Err(Error::argument("need at least one attempt"));
        }
        Ok(())
    }

    /// `ceil(delta * n / 8)`.
    pub fn target(&self, n: usize) -> usize {
        (self.delta * n as f64 / 8.0).ceil() as usize
    }
}

/// A tree in the host graph, given as a parent map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrownTree {
    /// Tree vertices in the order they were added; `vertices[0]` is the root.
    pub vertices: Vec<usize>,
    /// `parent[i]` is the parent of `vertices[i]` (`None` for the root).
    pub parent: Vec<Option<usize>>,
    /// Attempts spent, including the one that produced this tree.
    pub attempts_used: usize,
}

impl GrownTree {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn root(&self) -> usize {
        self.vertices[0]
    }

    /// Tree edges `(child, parent)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.iter().zip(&self.parent).filter_map(|(&v, p)| p.map(|p| (v, p)))
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = std::collections::HashMap::new();
        for (c, p) in self.edges() {
            *deg.entry(c).or_insert(0usize) += 1;
            *deg.entry(p).or_insert(0usize) += 1;
        }
        deg.values().copied().max().unwrap_or(0)
    }

    /// Parent-array text: a header with the vertex count, then `v parent`
    /// per vertex in insertion order, the root's parent written as `-1`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.len());
        for (&v, p) in self.vertices.iter().zip(&self.parent) {
            match p {
                Some(p) => writeln!(out, "{v} {p}").unwrap(),
                None => writeln!(out, "{v} -1").unwrap(),
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GrowthOutcome {
    Grown(GrownTree),
    /// No attempt produced the initial partial binary tree.
    Failure {
        attempts: usize,
    },
}

struct Grower<'a> {
    g: &'a Graph,
    used: Vec<bool>,
    unused: usize,
    /// Lowest index that might still be unused.
    scan: usize,
}

impl Grower<'_> {
    fn take(&mut self, v: usize) {
        debug_assert!(!self.used[v]);
        self.used[v] = true;
        self.unused -= 1;
    }

    /// Unused neighbours of `v` in increasing order, at most `cap`.
    fn fresh_neighbours(&self, v: usize, cap: usize) -> Vec<usize> {
        self.g.neighbors(v).iter().copied().filter(|&w| !self.used[w]).take(cap).collect()
    }

    /// Discards the `count` lowest-index unused vertices.
    fn discard(&mut self, count: usize) -> bool {
        if count > self.unused {
            return false;
        }
        let mut left = count;
        while left > 0 {
            if !self.used[self.scan] {
                self.take(self.scan);
                left -= 1;
            }
            self.scan += 1;
        }
        true
    }
}

/// Grows a tree of maximum degree at most `k_cap + 1`; see the module docs.
pub fn grow_bounded_degree_tree(g: &Graph, params: &TreeGrowthParams, seed: impl Into<Seed>) -> Result<GrowthOutcome> {
    params.validate()?;
    let n = g.n();
    if n == 0 {
        return Err(Error::domain("cannot grow a tree in the empty graph"));
    }
    let mut roots: Vec<usize> = (0..n).collect();
    roots.shuffle(&mut seed.into().rng());

    let mut st = Grower { g, used: vec![false; n], unused: n, scan: 0 };
    let target = params.target(n);
    let mut root_cursor = 0;
    let mut best: Option<GrownTree> = None;
    let mut attempts = 0;
    'attempts: while attempts < params.attempts {
        while root_cursor < n && st.used[roots[root_cursor]] {
            root_cursor += 1;
        }
        if root_cursor == n {
            break;
        }
        attempts += 1;
        let root = roots[root_cursor];
        st.take(root);
        let mut tree = GrownTree { vertices: vec![root], parent: vec![None], attempts_used: attempts };
        // FIFO order expands a leaf of minimal depth.
        let mut leaves = VecDeque::from([root]);
        while tree.len() < params.n1 {
            let w = leaves.pop_front().expect("a partial binary tree always has leaves");
            let kids = st.fresh_neighbours(w, 2);
            if kids.len() < 2 {
                if !st.discard(params.n1 - tree.len()) {
                    break 'attempts;
                }
                continue 'attempts;
            }
            for c in kids {
                st.take(c);
                tree.vertices.push(c);
                tree.parent.push(Some(w));
                leaves.push_back(c);
            }
        }

        let mut frontier: Vec<usize> = leaves.into_iter().collect();
        while tree.len() < target && !frontier.is_empty() {
            let mut next = Vec::new();
            'level: for &v in &frontier {
                for c in st.fresh_neighbours(v, params.k_cap) {
                    st.take(c);
                    tree.vertices.push(c);
                    tree.parent.push(Some(v));
                    next.push(c);
                    if tree.len() >= target {
                        break 'level;
                    }
                }
            }
            frontier = next;
        }
        if tree.len() >= target {
            return Ok(GrowthOutcome::Grown(tree));
        }
        // Growth died out; its vertices stay used and the next attempt starts.
        if best.as_ref().is_none_or(|b| tree.len() > b.len()) {
            best = Some(tree);
        }
    }
    Ok(match best {
        Some(tree) => GrowthOutcome::Grown(tree),
        None => GrowthOutcome::Failure { attempts },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{component_labels, VertexSet};

    fn params(n1: usize, k: usize, attempts: usize) -> TreeGrowthParams {
        TreeGrowthParams { delta: 0.2, k_cap: k, n1, attempts }
    }

    #[test]
    fn defaults() {
        let p = TreeGrowthParams::new(0.2, 100_000).unwrap();
        assert_eq!(p.k_cap, 7);
        assert_eq!(p.n1, 5);
        assert!(p.attempts >= 1 && p.attempts <= MAX_DEFAULT_ATTEMPTS);
        assert_eq!(p.target(100_000), 2500);
        assert_eq!(TreeGrowthParams::new(0.2, 3).unwrap().n1, 5);
        assert!(TreeGrowthParams::new(0.0, 10).is_err());
        assert!(params(4, 3, 1).validate().is_err());
        assert!(params(5, 1, 1).validate().is_err());
    }

    #[test]
    fn edgeless_fails() {
        let out = grow_bounded_degree_tree(&Graph::edgeless(50), &params(5, 3, 100), 1).unwrap();
        assert!(matches!(out, GrowthOutcome::Failure { .. }));
    }

    #[test]
    fn grows_spanning_tree_of_grid() {
        let g = Graph::grid(10, 10);
        let mut p = params(5, 3, 50);
        p.delta = 0.99;
        // target ceil(0.99 * 100 / 8) = 13
        let GrowthOutcome::Grown(t) = grow_bounded_degree_tree(&g, &p, 4).unwrap() else { panic!("grid should grow") };
        assert_eq!(t.len(), 13);
        assert!(t.max_degree() <= p.k_cap + 1);
        for (c, par) in t.edges() {
            assert!(g.has_edge(c, par));
        }
        // acyclic and connected: |E| = |V| - 1 and one component
        let verts = VertexSet::from_indices(100, t.vertices.iter().copied()).unwrap();
        assert_eq!(verts.len(), t.len());
        let tree_graph = Graph::new(100, t.edges()).unwrap();
        let sub = crate::graph::induced_subgraph(&tree_graph, &verts).unwrap();
        assert_eq!(component_labels(&sub.graph).1, 1);
        assert_eq!(sub.graph.edge_count(), t.len() - 1);
    }

    #[test]
    fn resumes_after_growth_dies_out() {
        // a 7-vertex binary tree on 0..7 next to a 10 x 10 grid; target 14
        let mut edges: Vec<(usize, usize)> = (1..7).map(|v| ((v - 1) / 2, v)).collect();
        edges.extend(Graph::grid(10, 10).edges().iter().map(|&(u, v)| (u + 7, v + 7)));
        let g = Graph::new(107, edges).unwrap();
        let mut p = params(5, 3, 100);
        p.delta = 0.99;
        let target = p.target(107);
        for seed in 0..20 {
            let GrowthOutcome::Grown(t) = grow_bounded_degree_tree(&g, &p, seed).unwrap() else {
                panic!("seed {seed}: no tree")
            };
            assert_eq!(t.len(), target, "seed {seed}");
            assert!(t.vertices.iter().all(|&v| v >= 7));
        }
        // a lone binary tree among isolated vertices cannot reach the
        // target, so some seed must return a stalled tree
        let g = Graph::new(200, (1..7).map(|v| ((v - 1) / 2 + 193, v + 193))).unwrap();
        let mut p = params(5, 3, 1000);
        p.delta = 0.99;
        let mut stalled = 0;
        for seed in 0..20 {
            if let GrowthOutcome::Grown(t) = grow_bounded_degree_tree(&g, &p, seed).unwrap() {
                assert!(t.len() >= 5 && t.len() <= 7 && t.len() < p.target(200));
                assert!(t.vertices.iter().all(|&v| v >= 193));
                stalled += 1;
            }
        }
        assert!(stalled > 0);
    }

    #[test]
    fn text_format() {
        let t = GrownTree { vertices: vec![4, 1, 2], parent: vec![None, Some(4), Some(4)], attempts_used: 1 };
        assert_eq!(t.to_text(), "3\n4 -1\n1 4\n2 4\n");
        assert_eq!(t.max_degree(), 2);
    }
}
