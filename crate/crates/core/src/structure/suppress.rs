use std::fmt::Write as _;

use super::core::two_core_multigraph;
use crate::graph::{Graph, MultiGraph, VertexSet};

/// How a suppressed multigraph maps back onto its input.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SuppressionMap {
    /// `to_host[i]` is the input vertex kept as output vertex `i`.
    pub to_host: Vec<usize>,
    /// For output edge `j`, the input walk `v0 v1 ... vk` it replaces; the
    /// interior vertices all had degree two and were suppressed.
    pub paths: Vec<Vec<usize>>,
}

impl SuppressionMap {
    /// Audit format, one line per output edge: `j: v0 v1 ... vk`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (j, path) in self.paths.iter().enumerate() {
            write!(out, "{j}:").unwrap();
            for v in path {
                write!(out, " {v}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    fn compose(self, outer: &[usize]) -> SuppressionMap {
        SuppressionMap {
            to_host: self.to_host.iter().map(|&v| outer[v]).collect(),
            paths: self.paths.into_iter().map(|p| p.into_iter().map(|v| outer[v]).collect()).collect(),
        }
    }
}

/// Replaces every degree-two vertex outside `keep` by an edge joining its
/// two neighbours (a loop when they coincide), until none is left.
///
/// Components that are cycles of suppressible vertices vanish entirely.
/// Degrees of surviving vertices are unchanged, and every suppression
/// removes one vertex and one edge, so the excess is preserved.
pub fn suppress_degree_two(g: &MultiGraph, keep: Option<&VertexSet>) -> (MultiGraph, SuppressionMap) {
    let n = g.n();
    let branch: Vec<bool> = (0..n).map(|v| g.degree(v) != 2 || keep.is_some_and(|k| k.contains(v))).collect();
    let to_host: Vec<usize> = (0..n).filter(|&v| branch[v]).collect();
    let mut to_out = vec![usize::MAX; n];
    for (i, &v) in to_host.iter().enumerate() {
        to_out[v] = i;
    }

    let mut used = vec![false; g.edge_count()];
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    for &start in &to_host {
        for &(first, first_edge) in g.incidences(start) {
            if used[first_edge] {
                continue;
            }
            used[first_edge] = true;
            let mut path = vec![start];
            let (mut cur, mut via) = (first, first_edge);
            while !branch[cur] {
                path.push(cur);
                let inc = g.incidences(cur);
                debug_assert_eq!(inc.len(), 2);
                let &(next, next_edge) = if inc[0].1 == via { &inc[1] } else { &inc[0] };
                used[next_edge] = true;
                cur = next;
                via = next_edge;
            }
            path.push(cur);
            edges.push((to_out[start], to_out[cur]));
            paths.push(path);
        }
    }
    (MultiGraph::from_vec(to_host.len(), edges), SuppressionMap { to_host, paths })
}

/// Kernel of a multigraph: its 2-core with isolated cycles deleted and
/// maximal bare paths contracted. Minimum degree of the result is at least 3.
pub fn kernel_multigraph(g: &MultiGraph) -> (MultiGraph, SuppressionMap) {
    let core = two_core_multigraph(g);
    let (k, map) = suppress_degree_two(&core.graph, None);
    (k, map.compose(&core.to_host))
}

/// Kernel of a simple graph; see [`kernel_multigraph`].
pub fn kernel(g: &Graph) -> (MultiGraph, SuppressionMap) {
    kernel_multigraph(&MultiGraph::from(g))
}
