use std::time::Instant;

use rayon::prelude::*;

use super::config::ExperimentConfig;
use super::profile::degree_profile;
use super::record::TrialRecord;
use crate::coupling::extract_cubic;
use crate::error::Result;
use crate::graph::{excess, induced_subgraph, largest_component, Graph};
use crate::random::{child_seed, sample_configuration, sample_gnp, DegreeSequence, Seed};
use crate::structure::{kernel, two_core};
use crate::width::{rankwidth_exact, treewidth_exact, RANKWIDTH_CAP, TREEWIDTH_CAP};

/// One trial on `G(n, (1 + epsilon) / n)`: giant component, its excess, its
/// 2-core and degree profile, the kernel, and a cubic extraction run on a
/// configuration resampled with the core's degree sequence.
pub(crate) fn sparse_trial(
    experiment: &str,
    n: usize,
    epsilon: f64,
    trial: usize,
    master: u64,
    config: &ExperimentConfig,
) -> Result<TrialRecord> {
    let start = Instant::now();
    let seed = Seed(child_seed(master, trial as u64));
    let g = sample_gnp(n, (1.0 + epsilon) / n as f64, seed)?;
    let l1 = induced_subgraph(&g, &largest_component(&g))?.graph;
    let core = two_core(&l1).graph;
    let profile = degree_profile(&core);
    let (kern, _) = kernel(&core);

    let d = DegreeSequence((0..core.n()).map(|v| core.degree(v)).collect());
    let resampled = sample_configuration(&d, seed.child(1))?;
    let extraction = extract_cubic(&resampled, &d)?;

    let (tw, rw) = exact_widths(&l1, config.width_cap)?;
    Ok(TrialRecord {
        experiment: experiment.to_string(),
        n,
        epsilon,
        trial,
        seed: seed.0,
        l1_size: l1.n(),
        l1_excess: excess(&l1),
        core_size: core.n(),
        d2: profile.d(2),
        d3: profile.d(3),
        w4plus: profile.heavy_weight(),
        kernel_v: kern.n(),
        kernel_e: kern.edge_count(),
        cubic_m: Some(extraction.m),
        tw,
        rw,
        runtime_ms: config.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Exact widths of `g` when its order is within both `cap` and the solver's
/// own limit; otherwise `None`.
pub(crate) fn exact_widths(g: &Graph, cap: usize) -> Result<(Option<usize>, Option<usize>)> {
    if g.n() == 0 {
        return Ok((None, None));
    }
    let tw = if g.n() <= cap.min(TREEWIDTH_CAP) { Some(treewidth_exact(g)?.0) } else { None };
    let rw = if g.n() <= cap.min(RANKWIDTH_CAP) { Some(rankwidth_exact(g)?.0) } else { None };
    Ok((tw, rw))
}

/// Runs every `(n, epsilon)` cell for `config.trials` trials in parallel.
pub fn run_sparse_scaling(config: &ExperimentConfig) -> Result<Vec<TrialRecord>> {
    config.validate()?;
    let name = config.experiment.name();
    let jobs: Vec<(usize, usize, f64, usize)> = config
        .cells()
        .into_iter()
        .enumerate()
        .flat_map(|(cell, (n, e))| (0..config.trials).map(move |t| (cell, n, e, t)))
        .collect();
    let mut out: Vec<(usize, TrialRecord)> = super::with_pool(|| {
        jobs.par_iter()
            .map(|&(cell, n, e, t)| sparse_trial(name, n, e, t, config.seed, config).map(|r| (cell, r)))
            .collect::<Result<Vec<_>>>()
    })??;
    out.sort_by_key(|(cell, r)| (*cell, r.trial));
    Ok(out.into_iter().map(|(_, r)| r).collect())
}

/// Per-cell means of the scaled statistics.
#[derive(Clone, Debug, PartialEq)]
pub struct CellSummary {
    pub n: usize,
    pub epsilon: f64,
    pub trials: usize,
    /// Mean of `D_3 / (epsilon^3 n)`.
    pub d3_scaled: f64,
    /// Mean of `D_2 / (epsilon^2 n)`.
    pub d2_scaled: f64,
    /// Mean of `excess(L1) / (epsilon^3 n)`.
    pub excess_scaled: f64,
    /// Trials with `|L1| >= epsilon n / 2`.
    pub giant_ok: usize,
    /// Trials with `excess(L1) + 1 <= 1.34 epsilon^3 n`.
    pub bracket_ok: usize,
}

pub fn summarize(records: &[TrialRecord]) -> Vec<CellSummary> {
    let mut out: Vec<CellSummary> = Vec::new();
    for r in records {
        let scale = ExperimentConfig::scale(r.n, r.epsilon);
        let sq = r.epsilon * r.epsilon * r.n as f64;
        let idx = match out.iter().position(|c| c.n == r.n && c.epsilon == r.epsilon) {
            Some(i) => i,
            None => {
                out.push(CellSummary {
                    n: r.n,
                    epsilon: r.epsilon,
                    trials: 0,
                    d3_scaled: 0.0,
                    d2_scaled: 0.0,
                    excess_scaled: 0.0,
                    giant_ok: 0,
                    bracket_ok: 0,
                });
                out.len() - 1
            }
        };
        let c = &mut out[idx];
        c.trials += 1;
        c.d3_scaled += r.d3 as f64 / scale;
        c.d2_scaled += r.d2 as f64 / sq;
        c.excess_scaled += r.l1_excess as f64 / scale;
        if 2.0 * r.l1_size as f64 >= r.epsilon * r.n as f64 {
            c.giant_ok += 1;
        }
        if (r.l1_excess + 1) as f64 <= 1.34 * scale {
            c.bracket_ok += 1;
        }
    }
    for c in &mut out {
        let t = c.trials as f64;
        c.d3_scaled /= t;
        c.d2_scaled /= t;
        c.excess_scaled /= t;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{write_csv, ExperimentKind};

    fn small() -> ExperimentConfig {
        let mut c = ExperimentConfig::new(ExperimentKind::SparseScaling, 4, 99);
        c.n = vec![300, 2000];
        c.epsilon = vec![0.3];
        c
    }

    #[test]
    fn deterministic_csv() {
        let a = run_sparse_scaling(&small()).unwrap();
        let b = run_sparse_scaling(&small()).unwrap();
        let (mut x, mut y) = (Vec::new(), Vec::new());
        write_csv(&a, &mut x).unwrap();
        write_csv(&b, &mut y).unwrap();
        assert_eq!(x, y);
        assert_eq!(a.len(), 8);
        for r in &a {
            let m = r.cubic_m.unwrap();
            assert!(m <= r.d3);
            assert!(m as i64 >= r.d3 as i64 - r.w4plus as i64);
            assert!(r.core_size <= r.l1_size && r.l1_size <= r.n);
            assert_eq!(r.runtime_ms, None);
        }
    }

    #[test]
    fn summary_means() {
        let recs = run_sparse_scaling(&small()).unwrap();
        let s = summarize(&recs);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].trials, 4);
        let scale = ExperimentConfig::scale(300, 0.3);
        let want: f64 = recs[..4].iter().map(|r| r.d3 as f64 / scale).sum::<f64>() / 4.0;
        assert!((s[0].d3_scaled - want).abs() < 1e-12);
    }
}
