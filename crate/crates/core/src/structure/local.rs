use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, Induced, VertexSet};

type Adjacency = Vec<BTreeSet<usize>>;

fn adjacency(g: &Graph) -> Adjacency {
    (0..g.n()).map(|v| g.neighbors(v).iter().copied().collect()).collect()
}

fn to_graph(adj: &Adjacency) -> Graph {
    let edges =
        adj.iter().enumerate().flat_map(|(u, ns)| ns.iter().filter(move |&&w| w > u).map(move |&w| (u, w))).collect();
    Graph::from_sorted(adj.len(), edges)
}

/// Toggles every pair inside `N(v)`.
fn complement_neighbourhood(adj: &mut Adjacency, v: usize) {
    let nbrs: Vec<usize> = adj[v].iter().copied().collect();
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !adj[a].remove(&b) {
                adj[a].insert(b);
                adj[b].insert(a);
            } else {
                adj[b].remove(&a);
            }
        }
    }
}

/// `G * v`: adjacency and non-adjacency reversed inside `N(v)`.
pub fn local_complement(g: &Graph, v: usize) -> Result<Graph> {
    if v >= g.n() {
        return Err(Error::Range { vertex: v, n: g.n() });
    }
    let mut adj = adjacency(g);
    complement_neighbourhood(&mut adj, v);
    Ok(to_graph(&adj))
}

/// Undoes subdivisions by local complementation: for each `x` in `X`, in
/// increasing order, `x` must currently have exactly two non-adjacent
/// neighbours `u, w`; complementing at `x` adds `uw`, then `x` is deleted.
///
/// Returns the graph induced on `V \ X` (relabeled) with its vertex map.
pub fn resolve_subdivision(g: &Graph, x: &VertexSet) -> Result<Induced<Graph>> {
    x.check_within(g.n())?;
    let mut adj = adjacency(g);
    for v in x.iter() {
        let nbrs: Vec<usize> = adj[v].iter().copied().collect();
        if nbrs.len() != 2 {
            return Err(Error::domain(format!("vertex {v} has degree {} when it is resolved, expected 2", nbrs.len())));
        }
        let (a, b) = (nbrs[0], nbrs[1]);
        if adj[a].contains(&b) {
            return Err(Error::domain(format!("neighbours {a} and {b} of vertex {v} are already adjacent")));
        }
        complement_neighbourhood(&mut adj, v);
        for w in nbrs {
            adj[w].remove(&v);
        }
        adj[v].clear();
    }
    induced_subgraph(&to_graph(&adj), &x.complement())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_centre_gives_triangle() {
        assert_eq!(local_complement(&Graph::path(3), 1).unwrap(), Graph::complete(3));
    }

    #[test]
    fn isolated_vertex_is_noop() {
        let g = Graph::new(4, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(local_complement(&g, 3).unwrap(), g);
        assert!(local_complement(&g, 4).is_err());
    }

    #[test]
    fn complement_removes_existing_edges() {
        // star with centre 0: complementing at 0 makes the leaves a clique
        let g = local_complement(&Graph::star(3), 0).unwrap();
        assert_eq!(g, Graph::complete(4));
        assert_eq!(local_complement(&g, 0).unwrap(), Graph::star(3));
    }

    #[test]
    fn single_subdivision_restored() {
        let g = Graph::path(3);
        let x = VertexSet::from_indices(3, [1]).unwrap();
        let out = resolve_subdivision(&g, &x).unwrap();
        assert_eq!(out.graph, Graph::complete(2));
        assert_eq!(out.to_host, vec![0, 2]);
    }

    #[test]
    fn subdivided_k4_resolves_to_k4() {
        // K4 on 0..4, subdivision vertex 4 + i on the i-th edge
        let k4 = Graph::complete(4);
        let mut edges = Vec::new();
        for (i, &(u, v)) in k4.edges().iter().enumerate() {
            edges.push((u, 4 + i));
            edges.push((4 + i, v));
        }
        let g = Graph::new(10, edges).unwrap();
        let x = VertexSet::from_indices(10, 4..10).unwrap();
        assert_eq!(resolve_subdivision(&g, &x).unwrap().graph, k4);
    }

    #[test]
    fn empty_set_is_identity() {
        let g = Graph::cycle(6);
        let out = resolve_subdivision(&g, &VertexSet::new(6)).unwrap();
        assert_eq!(out.graph, g);
    }

    #[test]
    fn precondition_violations_name_the_vertex() {
        let err = resolve_subdivision(&Graph::star(3), &VertexSet::from_indices(4, [0]).unwrap()).unwrap_err();
        assert!(err.to_string().contains("vertex 0"));
        // triangle: neighbours of 0 are adjacent
        let err = resolve_subdivision(&Graph::complete(3), &VertexSet::from_indices(3, [0]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Domain(ref m) if m.contains("vertex 0")));
    }
}
