//! Local complementation, undoing subdivisions, and cut-rank invariance.
//!
//! cargo run --example local_complementation

use widthlab::structure::{local_complement, resolve_subdivision};
use widthlab::width::{cutrank, rankwidth_exact};
use widthlab::{Graph, VertexSet};

fn main() -> widthlab::Result<()> {
    let star = Graph::star(4);
    let clique = local_complement(&star, 0)?;
    println!(
        "star K1,4 * 0 has {} edges; again: {} edges",
        clique.edge_count(),
        local_complement(&clique, 0)?.edge_count()
    );

    // cut-rank, and so rank-width, survives local complementation
    let g = Graph::cycle(6);
    let h = local_complement(&g, 2)?;
    let a = VertexSet::from_indices(6, [0, 1, 2])?;
    println!(
        "cutrank of {{0,1,2}}: {} in C6, {} after complementing at 2",
        cutrank(&g, &a, &a.complement())?,
        cutrank(&h, &a, &a.complement())?
    );
    println!("rank-width {} and {}", rankwidth_exact(&g)?.0, rankwidth_exact(&h)?.0);

    // subdivide every edge of K4, then undo it: vertices 4..10 sit on the edges
    let k4_edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let edges: Vec<(usize, usize)> =
        k4_edges.iter().enumerate().flat_map(|(i, &(u, v))| [(u, 4 + i), (4 + i, v)]).collect();
    let subdivided = Graph::new(10, edges)?;
    let back = resolve_subdivision(&subdivided, &VertexSet::from_indices(10, 4..10)?)?;
    println!("resolved subdivision is K4: {}", back.graph == Graph::complete(4));
    Ok(())
}
