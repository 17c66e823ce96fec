//! Cheeger constants of random cubic graphs, the rank-width lower bound they
//! give, and a uniformity test of the cubic extraction.
//!
//! cargo run --release --example expansion_survey -- [m] [samples]

use num_rational::Ratio;
use widthlab::experiments::{coupling_uniformity_test, cubic_expansion_survey, sample_simple_cubic};
use widthlab::graph::{cheeger_exact, component_labels};
use widthlab::random::{DegreeSequence, Seed};
use widthlab::width::rankwidth_exact;

fn main() -> widthlab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let m: usize = args.first().map_or(12, |s| s.parse().expect("m"));
    let samples: usize = args.get(1).map_or(100, |s| s.parse().expect("samples"));

    let survey = cubic_expansion_survey(m, samples, Seed(10))?;
    println!("G*({m}, 3): {} rejected draws, {} disconnected samples", survey.rejected, survey.disconnected);
    for (phi, count) in survey.histogram() {
        println!("  Phi = {phi}: {count}");
    }
    println!("Phi >= 2/11 in {:.1}%", 100.0 * survey.fraction_at_least(Ratio::new(2, 11)));

    let (g, draws) = sample_simple_cubic(m.min(12), Seed(3))?;
    // a disconnected sample has a cut with no edges
    let phi = if component_labels(&g).1 == 1 { cheeger_exact(&g)?.value } else { Ratio::from_integer(0) };
    let (rw, _) = rankwidth_exact(&g)?;
    println!(
        "one sample ({draws} draws): Phi = {phi}, rw = {rw}, Phi m / 9 = {:.3}",
        *phi.numer() as f64 / *phi.denom() as f64 * g.n() as f64 / 9.0
    );

    let report = coupling_uniformity_test(&DegreeSequence(vec![3, 3, 3, 3, 2, 2]), 20_000, Seed(4), 5.0)?;
    for t in &report.by_m {
        println!("extraction with m = {}: {} samples, test {:?}", t.m, t.samples, t.test);
    }
    Ok(())
}
