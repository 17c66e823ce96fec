//! Seeded G(n, p), sprinkling and the configuration model.
//!
//! cargo run --release --example sample_and_sprinkle

use widthlab::graph::{component_labels, largest_component};
use widthlab::random::{
    sample_configuration, sample_gnp, sample_random_regular, sprinkle_complement, union_graphs, DegreeSequence, Seed,
};

fn main() -> widthlab::Result<()> {
    let n = 100_000;
    let eps = 0.1;
    let p = (1.0 + eps) / n as f64;
    let seed = Seed(7);

    let g = sample_gnp(n, p, seed)?;
    let giant = largest_component(&g);
    println!("G({n}, {p:.2e}): {} edges, {} components, giant {}", g.edge_count(), component_labels(&g).1, giant.len());

    // two independent rounds whose union is distributed as G(n, p)
    let p1 = (1.0 + eps / 2.0) / n as f64;
    let p2 = sprinkle_complement(p, p1)?;
    let sprinkled = union_graphs(&sample_gnp(n, p1, seed.child(1))?, &sample_gnp(n, p2, seed.child(2))?)?;
    println!(
        "sprinkled p1 = {p1:.3e}, p2 = {p2:.3e}: giant {} before, {} after",
        largest_component(&sample_gnp(n, p1, seed.child(1))?).len(),
        largest_component(&sprinkled).len()
    );

    let d = DegreeSequence(vec![3, 3, 2, 2, 1, 1]);
    let c = sample_configuration(&d, seed)?;
    println!("configuration on {:?}: matching {:?}", d.0, c.matching());
    println!("projected multigraph edges {:?}", c.multigraph().edges());

    let cubic = sample_random_regular(10, 3, seed)?;
    println!(
        "G*(10, 3): {} loops, {} extra parallel edges, simple = {}",
        cubic.loop_count(),
        cubic.extra_parallel_count(),
        cubic.is_simple()
    );
    Ok(())
}
