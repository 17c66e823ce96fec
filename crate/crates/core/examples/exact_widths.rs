//! Exact tree-width, rank-width and balanced separators, with witnesses.
//!
//! cargo run --release --example exact_widths

use num_rational::Ratio;
use widthlab::width::{balanced_partition_from_separator, rankwidth_exact, sep_alpha_exact, treewidth_exact};
use widthlab::Graph;

fn main() -> widthlab::Result<()> {
    // outer 5-cycle, spokes, inner pentagram
    let petersen = Graph::new(10, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (i + 5, (i + 2) % 5 + 5)]))?;
    for (name, g) in [("grid 3x3", Graph::grid(3, 3)), ("K5", Graph::complete(5)), ("Petersen", petersen)] {
        let (tw, td) = treewidth_exact(&g)?;
        let (rw, rd) = rankwidth_exact(&g)?;
        td.validate(&g).expect("tree decomposition");
        rd.validate(&g, rw).expect("rank decomposition");
        let (k, s) = sep_alpha_exact(&g, Ratio::new(1, 2))?;
        println!("{name}: tw = {tw}, rw = {rw}, sep_1/2 = {k} via {s:?}");
        if k < g.n() {
            let p = balanced_partition_from_separator(&g, &s)?;
            println!("  balanced partition A = {:?}, B = {:?}", p.a, p.b);
        }
    }
    let (_, td) = treewidth_exact(&Graph::cycle(5))?;
    print!("tree decomposition of C5:\n{}", td.to_text());
    let (_, rd) = rankwidth_exact(&Graph::cycle(5))?;
    print!("rank decomposition of C5:\n{}", rd.to_text());
    Ok(())
}
