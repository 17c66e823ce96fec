use num_rational::Ratio;
use rayon::prelude::*;

use super::config::ExperimentConfig;
use super::expansion::{phi_or_zero, sample_simple_cubic};
use super::record::TrialRecord;
use super::sparse::sparse_trial;
use crate::error::{Error, Result};
use crate::graph::{components, excess, induced_subgraph};
use crate::random::{child_seed, sample_gnp, Seed};
use crate::width::{rankwidth_exact, treewidth_exact, RANKWIDTH_CAP, TREEWIDTH_CAP};

/// Lower-bound check on one random cubic graph: `rw >= phi m / 9`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicCheck {
    pub m: usize,
    pub trial: usize,
    pub phi: Ratio<u64>,
    pub rw: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WidthBracketReport {
    /// One record per sparse sample, with exact widths of its giant.
    pub records: Vec<TrialRecord>,
    pub cubic: Vec<CubicCheck>,
    /// Failed upper-bound checks on sparse components.
    pub violations: Vec<String>,
}

fn cubic_check(m: usize, trial: usize, seed: u64) -> Result<CubicCheck> {
    let (g, _) = sample_simple_cubic(m, Seed(seed).child(0).child(m as u64).child(trial as u64))?;
    let (phi, _) = phi_or_zero(&g)?;
    let rw = rankwidth_exact(&g)?.0;
    let holds = rw as u64 * 9 * phi.denom() >= phi.numer() * m as u64;
    Ok(CubicCheck { m, trial, phi, rw, holds })
}

/// Tree-width bound for a connected graph: a tree (excess -1) has
/// tree-width 1 and each further edge adds at most 1, so `excess + 2`.
/// `excess + 1` is not enough: cycles have excess 0 and tree-width 2.
pub fn excess_width_bound(excess: i64) -> i64 {
    excess + 2
}

/// Upper-bound checks on every component with an edge: tree-width at most
/// [`excess_width_bound`] and rank-width at most tree-width plus one.
fn sparse_check(n: usize, epsilon: f64, trial: usize, seed: u64) -> Result<Vec<String>> {
    let g = sample_gnp(n, (1.0 + epsilon) / n as f64, child_seed(seed, trial as u64))?;
    let mut bad = Vec::new();
    for comp in components(&g) {
        if comp.len() < 2 || comp.len() > TREEWIDTH_CAP {
            continue;
        }
        let h = induced_subgraph(&g, &comp)?.graph;
        let tw = treewidth_exact(&h)?.0;
        let bound = excess_width_bound(excess(&h));
        if tw as i64 > bound {
            bad.push(format!("n={n} eps={epsilon} trial={trial}: tw {tw} > {bound}"));
        }
        if h.n() <= RANKWIDTH_CAP {
            let rw = rankwidth_exact(&h)?.0;
            if rw > tw + 1 {
                bad.push(format!("n={n} eps={epsilon} trial={trial}: rw {rw} > tw + 1 = {}", tw + 1));
            }
        }
    }
    Ok(bad)
}

/// Small-scale checks of both sides of the width bracket: the expansion
/// lower bound on random cubic graphs of the orders in `config.cubic_m`, and
/// the excess upper bound on sparse random graphs of the orders in
/// `config.n` (at most 20).
pub fn width_bracket_small(config: &ExperimentConfig) -> Result<WidthBracketReport> {
    config.validate()?;
    if let Some(&m) = config.cubic_m.iter().find(|&&m| !(4..=RANKWIDTH_CAP).contains(&m) || m % 2 == 1) {
        return Err(Error::argument(format!("cubic order {m} must be even and within 4..={RANKWIDTH_CAP}")));
    }
    if let Some(&n) = config.n.iter().find(|&&n| n > 20) {
        return Err(Error::Capacity { what: "width bracket", n, cap: 20 });
    }
    let trials = config.trials;
    let cubic_jobs: Vec<(usize, usize)> =
        config.cubic_m.iter().flat_map(|&m| (0..trials).map(move |t| (m, t))).collect();
    let sparse_jobs: Vec<(usize, usize, f64, usize)> = config
        .cells()
        .into_iter()
        .enumerate()
        .flat_map(|(cell, (n, e))| (0..trials).map(move |t| (cell, n, e, t)))
        .collect();
    let name = config.experiment.name();
    let (cubic, sparse) = super::with_pool(|| {
        let cubic = cubic_jobs.par_iter().map(|&(m, t)| cubic_check(m, t, config.seed)).collect::<Result<Vec<_>>>();
        let sparse = sparse_jobs
            .par_iter()
            .map(|&(cell, n, e, t)| {
                let bad = sparse_check(n, e, t, config.seed)?;
                let rec = sparse_trial(name, n, e, t, config.seed, config)?;
                Ok((cell, rec, bad))
            })
            .collect::<Result<Vec<_>>>();
        (cubic, sparse)
    })?;
    let cubic = cubic?;
    let mut sparse = sparse?;
    sparse.sort_by_key(|(cell, r, _)| (*cell, r.trial));
    let mut records = Vec::with_capacity(sparse.len());
    let mut violations = Vec::new();
    for (_, r, bad) in sparse {
        records.push(r);
        violations.extend(bad);
    }
    Ok(WidthBracketReport { records, cubic, violations })
}
