//! Counting tree bipartitions with few crossing edges, the entropy bound,
//! and the truncated binomial mean.
//!
//! cargo run --example tree_partitions

use num_rational::Ratio;
use num_traits::ToPrimitive;
use widthlab::width::{count_tree_partitions, entropy_bound_holds, truncated_binomial_mean};
use widthlab::Graph;

fn main() -> widthlab::Result<()> {
    let t = Graph::path(10);
    let c = count_tree_partitions(&t, 3)?;
    println!("P10: {} ordered bipartitions with at most 3 crossing edges", c.total);
    println!("by number of crossings: {:?}", c.by_crossings);

    for (m, k) in [(20, 2), (40, 10), (60, 30)] {
        println!("entropy bound m = {m}, k = {k}: {}", entropy_bound_holds(m, k)?);
    }

    let (n, p, cap) = (1000, Ratio::new(12u64, 10_000), 8);
    let mean = truncated_binomial_mean(n, p, cap)?;
    println!(
        "E[min(Bin(1000, 0.0012), 8)] = {:.12} against np - K 2^-K = {:.12}",
        mean.to_f64().unwrap(),
        1.2 - cap as f64 / 256.0
    );
    Ok(())
}
