//! 2-core, kernel and the bare paths behind each kernel edge.
//!
//! cargo run --example core_and_kernel

use widthlab::experiments::degree_profile;
use widthlab::graph::{excess, read_graph};
use widthlab::structure::{kernel, two_core};

fn main() -> widthlab::Result<()> {
    // a theta graph (two branch vertices joined by three paths), a pendant
    // tree hanging off it, and a separate cycle
    let g = read_graph(
        "14 15
0 1
1 2
2 3
0 4
4 3
0 5
5 6
6 3
2 7
7 8
7 9
10 11
11 12
12 13
13 10
",
    )?;
    let core = two_core(&g);
    println!("2-core keeps {:?}", core.to_host);
    println!("degree profile of the core: {:?}", degree_profile(&core.graph).counts);

    let (k, map) = kernel(&g);
    println!("kernel: {} vertices, {} edges (excess {} as for the theta)", k.n(), k.edge_count(), excess(&k));
    print!("{}", map.to_text());
    Ok(())
}
