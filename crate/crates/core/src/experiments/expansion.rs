use std::collections::BTreeMap;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{cheeger_exact, Graph, BRUTE_FORCE_CAP};
use crate::random::{sample_random_regular, Seed};

/// Attempts allowed per requested simple sample before giving up.
const ATTEMPTS_PER_SAMPLE: usize = 1000;

/// First simple outcome among `G*(m, 3)` draws seeded by
/// `seed.child(0), seed.child(1), ...`, with the number of draws used.
pub fn sample_simple_cubic(m: usize, seed: impl Into<Seed>) -> Result<(Graph, usize)> {
    let seed = seed.into();
    for a in 0..ATTEMPTS_PER_SAMPLE {
        if let Some(g) = sample_random_regular(m, 3, seed.child(a as u64))?.to_simple() {
            return Ok((g, a + 1));
        }
    }
    Err(Error::domain(format!("no simple cubic graph on {m} vertices in {ATTEMPTS_PER_SAMPLE} draws")))
}

/// Exact Cheeger constants of simple samples of `G*(m, 3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionSurvey {
    pub m: usize,
    /// One value per simple sample, in sampling order. Disconnected samples
    /// have a cut of size zero and count as 0.
    pub phis: Vec<Ratio<u64>>,
    /// Multigraph draws discarded for having loops or parallel edges.
    pub rejected: usize,
    pub disconnected: usize,
}

impl ExpansionSurvey {
    pub fn histogram(&self) -> BTreeMap<Ratio<u64>, usize> {
        let mut h = BTreeMap::new();
        for &p in &self.phis {
            *h.entry(p).or_insert(0) += 1;
        }
        h
    }

    pub fn count_at_least(&self, threshold: Ratio<u64>) -> usize {
        self.phis.iter().filter(|&&p| p >= threshold).count()
    }

    pub fn fraction_at_least(&self, threshold: Ratio<u64>) -> f64 {
        self.count_at_least(threshold) as f64 / self.phis.len() as f64
    }
}

/// Cheeger constant, or 0 for a disconnected graph.
pub(crate) fn phi_or_zero(g: &Graph) -> Result<(Ratio<u64>, bool)> {
    if crate::graph::component_labels(g).1 > 1 {
        return Ok((Ratio::from_integer(0), false));
    }
    Ok((cheeger_exact(g)?.value, true))
}

/// Rejection-samples `samples` simple outcomes of `G*(m, 3)` and computes
/// the exact Cheeger constant of each.
pub fn cubic_expansion_survey(m: usize, samples: usize, seed: impl Into<Seed>) -> Result<ExpansionSurvey> {
    if m % 2 == 1 || m < 4 {
        return Err(Error::argument(format!("a cubic graph needs an even order of at least 4, got {m}")));
    }
    if m > BRUTE_FORCE_CAP {
        return Err(Error::Capacity { what: "Cheeger constant", n: m, cap: BRUTE_FORCE_CAP });
    }
    let seed = seed.into();
    let mut survey = ExpansionSurvey { m, phis: Vec::with_capacity(samples), rejected: 0, disconnected: 0 };
    let limit = ATTEMPTS_PER_SAMPLE * (samples + 1);
    let mut draw = 0u64;
    while survey.phis.len() < samples {
        if draw as usize >= limit {
            return Err(Error::domain(format!("only {} simple samples in {limit} draws", survey.phis.len())));
        }
        let g = sample_random_regular(m, 3, seed.child(draw))?;
        draw += 1;
        let Some(g) = g.to_simple() else {
            survey.rejected += 1;
            continue;
        };
        let (phi, connected) = phi_or_zero(&g)?;
        if !connected {
            survey.disconnected += 1;
        }
        survey.phis.push(phi);
    }
    Ok(survey)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_only() {
        let s = cubic_expansion_survey(4, 20, 1).unwrap();
        assert!(s.phis.iter().all(|&p| p == Ratio::new(2, 3)));
        assert_eq!(s.histogram().len(), 1);
    }

    #[test]
    fn reproducible() {
        let a = cubic_expansion_survey(10, 30, 5).unwrap();
        let b = cubic_expansion_survey(10, 30, 5).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.phis.len(), 30);
        assert!(a.rejected > 0);
    }

    #[test]
    fn arguments() {
        assert!(cubic_expansion_survey(5, 1, 1).is_err());
        assert!(matches!(cubic_expansion_survey(26, 1, 1), Err(Error::Capacity { .. })));
        let (g, _) = sample_simple_cubic(8, 3).unwrap();
        assert!((0..8).all(|v| g.degree(v) == 3));
    }
}
