//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! cargo test -p widthlab-acceptance

use std::time::Instant;

use num_bigint::BigUint;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use widthlab::coupling::{cubic_lower_bound, extract_cubic, validate_extraction};
use widthlab::experiments::{
    coupling_uniformity_test, cubic_expansion_survey, high_degree_incidence, run_sparse_scaling, sample_simple_cubic,
    summarize, ExperimentConfig, ExperimentKind, TrialRecord,
};
use widthlab::graph::{cheeger_exact, component_labels};
use widthlab::random::{sample_configuration, sample_gnp, DegreeSequence, Seed};
use widthlab::structure::{grow_bounded_degree_tree, GrowthOutcome, TreeGrowthParams};
use widthlab::width::{
    balanced_partition_from_separator, binomial, count_tree_partitions, entropy_bound_holds, gf2_rank, rankwidth_exact,
    sep_alpha_exact, treewidth_exact, truncated_binomial_bound_holds, BitMatrix,
};
use widthlab::VertexSet;
use widthlab_acceptance::{is_half_separator, random_graph, random_tree, Report};

/// Criteria 1 to 3 and 14 share the same runs.
fn sparse_runs(report: &mut Report) -> Vec<TrialRecord> {
    let mut config = ExperimentConfig::new(ExperimentKind::SparseScaling, 20, 20_000_001);
    config.n = vec![2_000_000];
    config.epsilon = vec![0.1];
    let start = Instant::now();
    let records = run_sparse_scaling(&config).unwrap();
    let elapsed = start.elapsed().as_secs_f64();
    let c = &summarize(&records)[0];
    report.check(
        "criterion 1",
        (1.07..=1.60).contains(&c.d3_scaled) && (1.70..=2.30).contains(&c.d2_scaled),
        format!(
            "mean D3/(eps^3 n) = {:.4} (want [1.07, 1.60]), mean D2/(eps^2 n) = {:.4} (want [1.70, 2.30]), {} trials in {elapsed:.1}s",
            c.d3_scaled, c.d2_scaled, c.trials
        ),
    );
    report.check(
        "criterion 2",
        (0.50..=0.85).contains(&c.excess_scaled),
        format!("mean excess(L1)/(eps^3 n) = {:.4} (want [0.50, 0.85])", c.excess_scaled),
    );
    report.check(
        "criterion 3",
        c.giant_ok >= 19,
        format!("|L1| >= eps n / 2 in {}/{} trials (want >= 19)", c.giant_ok, c.trials),
    );
    report.check(
        "criterion 14",
        c.bracket_ok >= 18,
        format!("excess(L1) + 1 <= 1.34 eps^3 n in {}/{} trials (want >= 18)", c.bracket_ok, c.trials),
    );
    records
}

fn rw_vs_tw(report: &mut Report) {
    let mut rng = Seed(4).rng();
    let mut violations = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=10);
        let p = *[0.2, 0.5, 0.8].choose(&mut rng).unwrap();
        let g = random_graph(&mut rng, n, p);
        let (rw, _) = rankwidth_exact(&g).unwrap();
        let (tw, _) = treewidth_exact(&g).unwrap();
        if rw > tw + 1 {
            violations += 1;
        }
    }
    report.check("criterion 4", violations == 0, format!("rw <= tw + 1 on 500 graphs, {violations} violations"));
}

fn tw_vs_separator(report: &mut Report) {
    let mut rng = Seed(5).rng();
    let mut violations = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let (tw, _) = treewidth_exact(&g).unwrap();
        let (sep, _) = sep_alpha_exact(&g, Ratio::new(1, 2)).unwrap();
        if tw + 1 < sep {
            violations += 1;
        }
    }
    report.check("criterion 5", violations == 0, format!("tw >= sep_1/2 - 1 on 500 graphs, {violations} violations"));
}

fn balanced_partitions(report: &mut Report) {
    let mut rng = Seed(6).rng();
    let mut confirmed = 0;
    let mut violations = 0;
    while confirmed < 500 {
        let n = rng.gen_range(3..=14);
        let p = rng.gen_range(0.1..0.6);
        let g = random_graph(&mut rng, n, p);
        let q = rng.gen_range(0.0..0.5);
        let s: Vec<bool> = (0..n).map(|_| rng.gen_bool(q)).collect();
        if s.iter().all(|&x| x) || !is_half_separator(&g, &s) {
            continue;
        }
        confirmed += 1;
        let set = VertexSet::from_indices(n, (0..n).filter(|&v| s[v])).unwrap();
        let ok = balanced_partition_from_separator(&g, &set)
            .map(|bp| bp.validate(&g).is_ok() && bp.s == set)
            .unwrap_or(false);
        if !ok {
            violations += 1;
        }
    }
    report.check(
        "criterion 6",
        violations == 0,
        format!("balanced partition invariants on {confirmed} confirmed separators, {violations} violations"),
    );
}

fn sparse_rank(report: &mut Report) {
    let mut rng = Seed(7).rng();
    let mut violations = 0;
    for i in 0..1000 {
        let cap = [2, 3, 5][i % 3];
        let rows = rng.gen_range(1..=48);
        let cols = rng.gen_range(1..=48);
        let mut m = BitMatrix::new(rows, cols);
        for _ in 0..rng.gen_range(0..=rows * cap) {
            let (r, c) = (rng.gen_range(0..rows), rng.gen_range(0..cols));
            if !m.get(r, c) && m.row_weight(r) < cap && m.col_weight(c) < cap {
                m.set(r, c, true);
            }
        }
        if gf2_rank(&m) * cap * cap < m.count_ones() {
            violations += 1;
        }
    }
    report.check("criterion 7", violations == 0, format!("rank >= nnz/M^2 on 1000 matrices, {violations} violations"));
}

fn tree_partitions(report: &mut Report) {
    let mut rng = Seed(8).rng();
    let mut violations = 0;
    for _ in 0..200 {
        let m = rng.gen_range(2..=12);
        let t = random_tree(&mut rng, m);
        let mut brute = vec![0u64; m];
        for mask in 0..1u64 << m {
            let crossing = t.edges().iter().filter(|&&(u, v)| (mask >> u & 1) != (mask >> v & 1)).count();
            brute[crossing] += 1;
        }
        let full = count_tree_partitions(&t, m - 1).unwrap();
        // the empty-side colourings are the whole of the zero-crossing class
        let enumerated: BigUint = full.by_crossings.iter().sum::<BigUint>() + 2u32;
        let mut ok = enumerated == BigUint::from(1u64 << m) && brute[0] == 2;
        for k in 1..m {
            let c = count_tree_partitions(&t, k).unwrap();
            let closed: BigUint = (1..=k).map(|i| binomial(m - 1, i) * 2u32).sum();
            let from_brute: u64 = brute[1..=k].iter().sum();
            ok &= c.total == closed && c.total == BigUint::from(from_brute);
        }
        for (i, x) in full.by_crossings.iter().enumerate().skip(1) {
            ok &= *x == BigUint::from(brute[i]) && *x <= binomial(m, i) << i;
        }
        if !ok {
            violations += 1;
        }
    }
    let mut entropy_fail = 0;
    for m in 1..=60 {
        for k in 1..=m / 2 {
            if !entropy_bound_holds(m, k).unwrap() {
                entropy_fail += 1;
            }
        }
    }
    report.check(
        "criterion 8",
        violations == 0 && entropy_fail == 0,
        format!("200 trees: {violations} count mismatches; entropy bound for m <= 60: {entropy_fail} failures"),
    );
}

fn coupling(report: &mut Report) {
    let mut rng = Seed(9).rng();
    let mut violations = 0;
    for i in 0..1000u64 {
        let len = rng.gen_range(1..=30);
        let mut degrees: Vec<usize> = (0..len).map(|_| rng.gen_range(2..=6)).collect();
        if degrees.iter().sum::<usize>() % 2 == 1 {
            degrees[0] = if degrees[0] == 6 { 5 } else { degrees[0] + 1 };
        }
        let d = DegreeSequence(degrees);
        let c = sample_configuration(&d, Seed(90).child(i)).unwrap();
        let x = extract_cubic(&c, &d).unwrap();
        let cubic = x.cubic.degrees().0.iter().all(|&k| k == 3);
        if !cubic || (x.m as i64) < cubic_lower_bound(&d) || !validate_extraction(&c, &d, &x).is_ok() {
            violations += 1;
        }
    }
    let d = DegreeSequence(vec![3, 3, 3, 3, 2, 2]);
    let u = coupling_uniformity_test(&d, 50_000, Seed(91), 5.0).unwrap();
    let p = u.min_p_value();
    report.check(
        "criterion 9",
        violations == 0 && p.is_some_and(|p| p > 0.001),
        format!(
            "1000 sequences: {violations} violations; uniformity min p = {} over {} values of m",
            p.map_or("none".into(), |p| format!("{p:.4}")),
            u.by_m.len()
        ),
    );
}

fn expansion(report: &mut Report) {
    let survey = cubic_expansion_survey(14, 300, Seed(10)).unwrap();
    let frac = survey.fraction_at_least(Ratio::new(2, 11));
    // e(S, S^c) / |S| = 3 Phi for a cubic graph
    let iso = survey.fraction_at_least(Ratio::new(2, 33));
    report.check(
        "criterion 10",
        frac >= 0.9,
        format!(
            "Phi >= 2/11 in {:.1}% of 300 simple G*(14, 3) samples (want >= 90%); e(S,S^c)/|S| >= 2/11 in {:.1}%",
            100.0 * frac,
            100.0 * iso
        ),
    );
}

fn cubic_chain(report: &mut Report) {
    let mut violations = 0;
    for i in 0..100u64 {
        let m = [4, 6, 8, 10, 12][i as usize % 5];
        let (g, _) = sample_simple_cubic(m, Seed(11).child(i)).unwrap();
        let phi = if component_labels(&g).1 == 1 { cheeger_exact(&g).unwrap().value } else { Ratio::from_integer(0) };
        let (rw, _) = rankwidth_exact(&g).unwrap();
        if (9 * rw as u64) * phi.denom() < phi.numer() * m as u64 {
            violations += 1;
        }
    }
    report.check(
        "criterion 11",
        violations == 0,
        format!("rw >= Phi m / 9 on 100 cubic graphs, {violations} violations"),
    );
}

fn tree_growth(report: &mut Report) {
    let n = 100_000;
    let params = TreeGrowthParams::new(0.2, n).unwrap();
    let target = params.target(n);
    let mut big = 0;
    let mut degree_ok = true;
    let mut sizes = Vec::new();
    for s in 0..10u64 {
        let g = sample_gnp(n, 1.2 / n as f64, Seed(12).child(s)).unwrap();
        match grow_bounded_degree_tree(&g, &params, Seed(120).child(s)).unwrap() {
            GrowthOutcome::Grown(t) => {
                degree_ok &= t.max_degree() <= 8;
                big += (t.len() >= 2500) as usize;
                sizes.push(t.len());
            }
            GrowthOutcome::Failure { .. } => sizes.push(0),
        }
    }
    report.check(
        "criterion 12",
        params.k_cap == 7 && degree_ok && big >= 9,
        format!(
            "K = {}, target {target}: max degree <= 8 on every run = {degree_ok}, |T| >= 2500 in {big}/10 (sizes {sizes:?})",
            params.k_cap
        ),
    );
}

fn truncated_binomial(report: &mut Report) {
    let mut violations = 0;
    let mut points = 0;
    for n in 10..=1000u64 {
        for (a, b) in [(1u64, 1u64), (6, 5), (3, 2)] {
            let d = a as f64 / b as f64;
            let cap = (2.0 * std::f64::consts::E * d).ceil() as usize + 1;
            points += 1;
            match truncated_binomial_bound_holds(n as usize, Ratio::new(a, b * n), cap).unwrap() {
                Some(true) => {}
                _ => violations += 1,
            }
        }
    }
    report.check(
        "criterion 13",
        violations == 0,
        format!("E[min(Bin(n,p),K)] >= np - K 2^-K on {points} grid points, {violations} violations"),
    );
}

/// The incidence example from the sparse-graph module, reported after the
/// numbered criteria.
fn incidence(report: &mut Report) {
    let n = 100_000;
    let values: Vec<usize> = (0..10u64)
        .map(|s| {
            let g = sample_gnp(n, 1.2 / n as f64, Seed(13).child(s)).unwrap();
            high_degree_incidence(&g, 0.05).unwrap()
        })
        .collect();
    let bound = 0.05 * n as f64;
    report.check(
        "example high_degree_incidence",
        values.iter().all(|&v| v as f64 <= bound),
        format!("G(1e5, 1.2/1e5), delta = 0.05: incidence {values:?} (want <= {bound} in every run)"),
    );
}

fn main() {
    let mut report = Report::default();
    sparse_runs(&mut report);
    rw_vs_tw(&mut report);
    tw_vs_separator(&mut report);
    balanced_partitions(&mut report);
    sparse_rank(&mut report);
    tree_partitions(&mut report);
    coupling(&mut report);
    expansion(&mut report);
    cubic_chain(&mut report);
    tree_growth(&mut report);
    truncated_binomial(&mut report);
    incidence(&mut report);
    if report.failed.is_empty() {
        println!("acceptance: all criteria pass");
    } else {
        println!("acceptance: failing {}", report.failed.join(", "));
        std::process::exit(1);
    }
}
