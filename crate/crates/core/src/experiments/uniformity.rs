use std::collections::BTreeMap;

use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::coupling::extract_cubic;
use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::random::{sample_configuration, DegreeSequence, Seed};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChiSquare {
    pub statistic: f64,
    pub dof: usize,
    pub p_value: f64,
    /// Bins after pooling.
    pub bins: usize,
}

/// Two-sample chi-square test of homogeneity on category counts.
///
/// Categories are ranked by combined count; the longest prefix in which
/// every expected count reaches `min_expected` is kept and the remaining
/// categories are pooled into one bin, which is merged into the last kept
/// bin if it is itself too small. Returns `None` when fewer than two bins
/// remain.
pub fn chi_square_two_sample<K: Ord + Clone>(
    a: &BTreeMap<K, usize>,
    b: &BTreeMap<K, usize>,
    min_expected: f64,
) -> Option<ChiSquare> {
    let (na, nb) = (a.values().sum::<usize>() as f64, b.values().sum::<usize>() as f64);
    if na == 0.0 || nb == 0.0 {
        return None;
    }
    let total = na + nb;
    let mut cats: Vec<(usize, usize)> = a
        .keys()
        .chain(b.keys())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .map(|k| (a.get(k).copied().unwrap_or(0), b.get(k).copied().unwrap_or(0)))
        .collect();
    cats.sort_by_key(|&(x, y)| std::cmp::Reverse(x + y));
    let small = na.min(nb);
    let expected_ok = |(x, y): (usize, usize)| small * (x + y) as f64 / total >= min_expected;
    let keep = cats.iter().take_while(|&&c| expected_ok(c)).count();
    let mut bins: Vec<(usize, usize)> = cats[..keep].to_vec();
    let pooled = cats[keep..].iter().fold((0, 0), |acc, c| (acc.0 + c.0, acc.1 + c.1));
    if pooled != (0, 0) {
        if expected_ok(pooled) || bins.is_empty() {
            bins.push(pooled);
        } else {
            let last = bins.last_mut().unwrap();
            last.0 += pooled.0;
            last.1 += pooled.1;
        }
    }
    if bins.len() < 2 {
        return None;
    }
    let mut statistic = 0.0;
    for &(x, y) in &bins {
        let c = (x + y) as f64;
        for (obs, n) in [(x as f64, na), (y as f64, nb)] {
            let e = n * c / total;
            statistic += (obs - e).powi(2) / e;
        }
    }
    let dof = bins.len() - 1;
    let dist = ChiSquared::new(dof as f64).expect("positive degrees of freedom");
    Some(ChiSquare { statistic, dof, p_value: dist.sf(statistic), bins: bins.len() })
}

/// Loop count and surplus parallel-edge count.
fn shape(g: &MultiGraph) -> (usize, usize) {
    (g.loop_count(), g.extra_parallel_count())
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConditionedTest {
    pub m: usize,
    pub samples: usize,
    /// `None` when pooling leaves a single bin.
    pub test: Option<ChiSquare>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct UniformityReport {
    pub degrees: DegreeSequence,
    pub samples: usize,
    /// Every cell had degree 3, so extraction must be the identity; checked
    /// exactly instead of statistically.
    pub identity: bool,
    pub by_m: Vec<ConditionedTest>,
}

impl UniformityReport {
    pub fn min_p_value(&self) -> Option<f64> {
        self.by_m.iter().filter_map(|t| t.test.map(|c| c.p_value)).min_by(f64::total_cmp)
    }
}

/// Extracts a cubic configuration from `samples` uniform configurations with
/// degrees `d`, groups the outcomes by `m`, and compares the distribution of
/// (loops, surplus parallel edges) in each group against the same number of
/// direct samples of `G*(m, 3)`.
pub fn coupling_uniformity_test(
    d: &DegreeSequence,
    samples: usize,
    seed: impl Into<Seed>,
    min_expected: f64,
) -> Result<UniformityReport> {
    let seed = seed.into();
    let identity = d.0.iter().all(|&k| k == 3);
    let mut observed: BTreeMap<usize, BTreeMap<(usize, usize), usize>> = BTreeMap::new();
    for i in 0..samples {
        let c = sample_configuration(d, seed.child(0).child(i as u64))?;
        let x = extract_cubic(&c, d)?;
        if identity && x.cubic != c {
            return Err(Error::Validation(format!("sample {i}: extraction changed a cubic configuration")));
        }
        *observed.entry(x.m).or_default().entry(shape(&x.cubic.multigraph())).or_insert(0) += 1;
    }
    let mut by_m = Vec::new();
    for (&m, counts) in &observed {
        let count: usize = counts.values().sum();
        let test = if identity {
            None
        } else {
            let mut reference: BTreeMap<(usize, usize), usize> = BTreeMap::new();
            let stream = seed.child(1).child(m as u64);
            let cubic = DegreeSequence::constant(m, 3);
            for j in 0..count {
                let c = sample_configuration(&cubic, stream.child(j as u64))?;
                *reference.entry(shape(&c.multigraph())).or_insert(0) += 1;
            }
            chi_square_two_sample(counts, &reference, min_expected)
        };
        by_m.push(ConditionedTest { m, samples: count, test });
    }
    Ok(UniformityReport { degrees: d.clone(), samples, identity, by_m })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(xs: &[(u8, usize)]) -> BTreeMap<u8, usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn chi_square_by_hand() {
        // 2x2 table 30/70 vs 50/50: expected 40/60 each side
        let a = counts(&[(0, 30), (1, 70)]);
        let b = counts(&[(0, 50), (1, 50)]);
        let t = chi_square_two_sample(&a, &b, 5.0).unwrap();
        let want = 2.0 * (100.0 / 40.0 + 100.0 / 60.0);
        assert!((t.statistic - want).abs() < 1e-12);
        assert_eq!(t.dof, 1);
        assert!(t.p_value < 0.01);
    }

    #[test]
    fn pooling() {
        // categories 2 and 3 are tiny and get pooled, then merged into 1
        let a = counts(&[(0, 50), (1, 40), (2, 1), (3, 1)]);
        let b = counts(&[(0, 45), (1, 45), (2, 2)]);
        let t = chi_square_two_sample(&a, &b, 5.0).unwrap();
        assert_eq!(t.bins, 2);
        let one = counts(&[(0, 10)]);
        assert!(chi_square_two_sample(&one, &one, 5.0).is_none());
    }

    #[test]
    fn cubic_degrees_are_identity() {
        let r = coupling_uniformity_test(&DegreeSequence::constant(6, 3), 200, 3, 5.0).unwrap();
        assert!(r.identity);
        assert_eq!(r.by_m, vec![ConditionedTest { m: 6, samples: 200, test: None }]);
    }

    #[test]
    fn reproducible() {
        let d = DegreeSequence(vec![3, 3, 2]);
        let a = coupling_uniformity_test(&d, 2000, 8, 5.0).unwrap();
        assert_eq!(a, coupling_uniformity_test(&d, 2000, 8, 5.0).unwrap());
        assert_eq!(a.by_m.len(), 1);
        assert_eq!(a.by_m[0].m, 2);
    }
}
