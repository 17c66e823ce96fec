use std::collections::VecDeque;

use crate::graph::{induced_subgraph, EdgeView, Graph, Induced, MultiGraph, VertexSet};

/// Vertices surviving iterated deletion of vertices of degree at most one.
fn peel<G: EdgeView + ?Sized>(g: &G, neighbours: impl Fn(usize) -> Vec<usize>) -> VertexSet {
    let n = g.vertex_count();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    for &v in &queue {
        removed[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        for w in neighbours(v) {
            if removed[w] {
                continue;
            }
            degree[w] -= 1;
            if degree[w] <= 1 {
                removed[w] = true;
                queue.push_back(w);
            }
        }
    }
    let mut keep = VertexSet::new(n);
    for v in (0..n).filter(|&v| !removed[v]) {
        keep.insert(v);
    }
    keep
}

/// The 2-core: the maximal subgraph of minimum degree at least two (possibly
/// empty), as an induced subgraph with its vertex map.
pub fn two_core(g: &Graph) -> Induced<Graph> {
    let keep = peel(g, |v| g.neighbors(v).to_vec());
    induced_subgraph(g, &keep).expect("peeled set lies inside the graph")
}

/// 2-core of a multigraph; a loop contributes two to the degree.
pub fn two_core_multigraph(g: &MultiGraph) -> Induced<MultiGraph> {
    // A loop never lowers the degree of another vertex, so only non-loop
    // incidences are propagated.
    let keep = peel(g, |v| g.incidences(v).iter().filter(|&&(w, _)| w != v).map(|&(w, _)| w).collect());
    g.induced(&keep).expect("peeled set lies inside the graph")
}
