//! Extracting a uniform cubic configuration from a configuration with
//! minimum degree two, with the audit trace and an independent check.
//!
//! cargo run --example cubic_extraction

use widthlab::coupling::{cubic_lower_bound, extract_cubic, validate_extraction};
use widthlab::random::{sample_configuration, DegreeSequence, Seed};

fn main() -> widthlab::Result<()> {
    let d = DegreeSequence(vec![3, 3, 3, 3, 3, 3, 3, 3, 4, 2, 2, 2]);
    let c = sample_configuration(&d, Seed(3))?;
    println!("input multigraph: {:?}", c.multigraph().edges());

    let x = extract_cubic(&c, &d)?;
    println!("m = {} cubic cells (lower bound {})", x.m, cubic_lower_bound(&d));
    print!("trace:\n{}", x.trace.to_text());
    println!("input cells behind each output cell: {:?}", x.trace.cell_history);
    println!("cubic multigraph: {:?}", x.cubic.multigraph().edges());

    let report = validate_extraction(&c, &d, &x);
    println!(
        "validation: {}",
        if report.is_ok() { "all clauses hold".to_string() } else { format!("{:?}", report.violations) }
    );
    Ok(())
}
