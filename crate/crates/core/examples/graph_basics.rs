//! Graphs, vertex sets, cuts and the exact expansion measures.
//!
//! cargo run --example graph_basics

use widthlab::graph::{
    bisection_width_exact, cheeger_exact, cr_lower_bound, edge_cut, excess, read_multigraph, write_graph,
};
use widthlab::{Graph, MultiGraph, VertexSet};

fn main() -> widthlab::Result<()> {
    let g = Graph::grid(3, 4);
    println!("3x4 grid: {} vertices, {} edges, excess {}", g.n(), g.edge_count(), excess(&g));

    let left = VertexSet::from_indices(12, [0, 1, 4, 5, 8, 9])?;
    println!("left half {:?} is cut by {} edges", left, edge_cut(&g, &left, &left.complement())?);

    let phi = cheeger_exact(&g)?;
    println!("Cheeger constant {} attained by {:?}", phi.value, phi.argmin);
    let b = bisection_width_exact(&g)?;
    println!("bisection width {} with side {:?}", b.width, b.side);
    println!("crossing-number lower bound {}", cr_lower_bound(&g)?);

    // loops add two to the degree and never cross a cut
    let theta: MultiGraph = read_multigraph("2 4\n0 1\n0 1\n0 1\n1 1\n")?;
    println!("theta with a loop: Cheeger constant {}", cheeger_exact(&theta)?.value);

    print!("edge list of C4:\n{}", write_graph(&Graph::cycle(4)));
    Ok(())
}
