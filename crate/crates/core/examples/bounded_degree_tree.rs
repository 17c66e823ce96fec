//! Growing a large tree of bounded degree in a supercritical random graph.
//!
//! cargo run --release --example bounded_degree_tree -- [n] [delta]

use widthlab::random::{sample_gnp, Seed};
use widthlab::structure::{grow_bounded_degree_tree, GrowthOutcome, TreeGrowthParams};

fn main() -> widthlab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().map_or(100_000, |s| s.parse().expect("n"));
    let delta: f64 = args.get(1).map_or(0.2, |s| s.parse().expect("delta"));

    let params = TreeGrowthParams::new(delta, n)?;
    println!("K = {}, N1 = {}, attempts = {}, target {}", params.k_cap, params.n1, params.attempts, params.target(n));
    for s in 0..5 {
        let g = sample_gnp(n, (1.0 + delta) / n as f64, Seed(1).child(s))?;
        match grow_bounded_degree_tree(&g, &params, Seed(2).child(s))? {
            GrowthOutcome::Grown(t) => println!(
                "seed {s}: {} vertices, max degree {}, root {}, {} attempts",
                t.len(),
                t.max_degree(),
                t.root(),
                t.attempts_used
            ),
            GrowthOutcome::Failure { attempts } => println!("seed {s}: failed after {attempts} attempts"),
        }
    }
    Ok(())
}
