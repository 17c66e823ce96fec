use super::{EdgeView, Graph, MultiGraph, VertexSet};
use crate::error::Result;

/// A subgraph together with the map from its vertices back to the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced<G> {
    pub graph: G,
    /// `to_host[i]` is the host vertex of subgraph vertex `i`.
    pub to_host: Vec<usize>,
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Component label per vertex, labels numbered `0..count` in order of each
/// component's smallest vertex. Returns `(labels, count)`.
pub fn component_labels<G: EdgeView + ?Sized>(g: &G) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    for &(u, v) in g.edge_list() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        let r = find(&mut parent, v);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        label[v] = label[r];
    }
    (label, count)
}

/// Connected components, ordered by smallest vertex.
pub fn components<G: EdgeView + ?Sized>(g: &G) -> Vec<VertexSet> {
    let n = g.vertex_count();
    let (labels, count) = component_labels(g);
    let mut out = vec![VertexSet::new(n); count];
    for (v, &l) in labels.iter().enumerate() {
        out[l].insert(v);
    }
    out
}

/// The largest component; ties go to the one with the smallest vertex.
pub fn largest_component<G: EdgeView + ?Sized>(g: &G) -> VertexSet {
    let n = g.vertex_count();
    let (labels, count) = component_labels(g);
    let mut sizes = vec![0usize; count];
    for &l in &labels {
        sizes[l] += 1;
    }
    let mut set = VertexSet::new(n);
    if let Some(best) = (0..count).max_by_key(|&l| (sizes[l], std::cmp::Reverse(l))) {
        for (v, &l) in labels.iter().enumerate() {
            if l == best {
                set.insert(v);
            }
        }
    }
    set
}

fn relabeling(n: usize, keep: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let to_host: Vec<usize> = keep.iter().collect();
    let mut to_sub = vec![usize::MAX; n];
    for (i, &v) in to_host.iter().enumerate() {
        to_sub[v] = i;
    }
    (to_host, to_sub)
}

/// Subgraph induced by `keep`, vertices relabeled in increasing order.
pub fn induced_subgraph(g: &Graph, keep: &VertexSet) -> Result<Induced<Graph>> {
    keep.check_within(g.n())?;
    let (to_host, to_sub) = relabeling(g.n(), keep);
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| to_sub[u] != usize::MAX && to_sub[v] != usize::MAX)
        .map(|&(u, v)| (to_sub[u], to_sub[v]))
        .collect();
    // Monotone relabeling keeps the edge list sorted.
    Ok(Induced { graph: Graph::from_sorted(to_host.len(), edges), to_host })
}

impl MultiGraph {
    /// Sub-multigraph induced by `keep`; edge order follows the host.
    pub fn induced(&self, keep: &VertexSet) -> Result<Induced<MultiGraph>> {
        keep.check_within(self.n())?;
        let (to_host, to_sub) = relabeling(self.n(), keep);
        let edges = self
            .edges()
            .iter()
            .filter(|&&(u, v)| to_sub[u] != usize::MAX && to_sub[v] != usize::MAX)
            .map(|&(u, v)| (to_sub[u], to_sub[v]))
            .collect();
        Ok(Induced { graph: MultiGraph::from_vec(to_host.len(), edges), to_host })
    }
}
