//! Degree profile, excess and extraction size of the giant component of
//! G(n, (1 + eps) / n), averaged over seeded trials.
//!
//! cargo run --release --example sparse_scaling -- [n] [eps] [trials]

use widthlab::experiments::{run_sparse_scaling, summarize, ExperimentConfig, ExperimentKind};

fn main() -> widthlab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().map_or(Ok(200_000), |s| s.parse()).expect("n");
    let eps = args.get(1).map_or(Ok(0.1), |s| s.parse()).expect("eps");
    let trials = args.get(2).map_or(Ok(5), |s| s.parse()).expect("trials");

    let mut config = ExperimentConfig::new(ExperimentKind::SparseScaling, trials, 2024);
    config.n = vec![n];
    config.epsilon = vec![eps];
    config.timing = true;

    let records = run_sparse_scaling(&config)?;
    println!("trial  |L1|  excess  core  D2  D3  heavy  kernel(v,e)  m  ms");
    for r in &records {
        println!(
            "{:>5} {:>6} {:>6} {:>6} {:>5} {:>4} {:>4} {:>6},{:<6} {:>4} {:>5}",
            r.trial,
            r.l1_size,
            r.l1_excess,
            r.core_size,
            r.d2,
            r.d3,
            r.w4plus,
            r.kernel_v,
            r.kernel_e,
            r.cubic_m.unwrap_or(0),
            r.runtime_ms.unwrap_or(0)
        );
    }
    for c in summarize(&records) {
        println!(
            "means: D3/(eps^3 n) = {:.3}, D2/(eps^2 n) = {:.3}, excess/(eps^3 n) = {:.3}; giant >= eps n / 2 in {}/{}",
            c.d3_scaled, c.d2_scaled, c.excess_scaled, c.giant_ok, c.trials
        );
    }
    Ok(())
}
