//! Seeded samplers: binomial random graphs, sprinkling, configuration model.
//!
//! Every sampler is a pure function of its parameters and a 64-bit seed. The
//! generator is ChaCha8 (`rand_chacha::ChaCha8Rng::seed_from_u64`), which is
//! platform independent. Independent streams are derived with
//! [`child_seed`], a stateless SplitMix64-style mixer:
//!
//! ```text
//! child_seed(master, index) = mix(master ^ mix(index + 0x9E3779B97F4A7C15))
//! ```
//!
//! where `mix` is the SplitMix64 finalizer (all arithmetic wrapping).

use std::ops::Range;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, MultiGraph};

pub use crate::graph::union_graphs;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the seed of stream `index` from a master seed.
pub fn child_seed(master: u64, index: u64) -> u64 {
    mix(master ^ mix(index.wrapping_add(GOLDEN)))
}

/// A master seed with helpers for stream derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Seed(pub u64);

impl Seed {
    pub fn child(self, index: u64) -> Seed {
        Seed(child_seed(self.0, index))
    }

    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

impl From<u64> for Seed {
    fn from(s: u64) -> Self {
        Seed(s)
    }
}

fn check_probability(p: f64, what: &str) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::argument(format!("{what} = {p} is not a probability")))
    }
}

/// Samples `G(n, p)` in expected `O(n + m)` time by geometric skipping over
/// the `C(n, 2)` vertex pairs.
pub fn sample_gnp(n: usize, p: f64, seed: impl Into<Seed>) -> Result<Graph> {
    check_probability(p, "p")?;
    if p == 0.0 || n < 2 {
        return Ok(Graph::edgeless(n));
    }
    if p == 1.0 {
        return Ok(Graph::complete(n));
    }
    let mut rng = seed.into().rng();
    let log_q = (-p).ln_1p();
    let mut edges = Vec::new();
    // Pairs are visited as (w, v) with w < v, v ascending then w ascending.
    let (mut v, mut w): (u64, i64) = (1, -1);
    let n64 = n as u64;
    while v < n64 {
        let r: f64 = rng.gen();
        let skip = ((-r).ln_1p() / log_q).floor();
        if skip >= (n64 as f64) * (n64 as f64) {
            break;
        }
        w += 1 + skip as i64;
        while w >= v as i64 && v < n64 {
            w -= v as i64;
            v += 1;
        }
        if v < n64 {
            edges.push((w as usize, v as usize));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

/// The sprinkling probability `p2` with `(1 - p1)(1 - p2) = 1 - p`.
pub fn sprinkle_complement(p: f64, p1: f64) -> Result<f64> {
    check_probability(p, "p")?;
    check_probability(p1, "p1")?;
    if p >= 1.0 {
        return Err(Error::argument("p must be below 1"));
    }
    if p1 > p {
        return Err(Error::argument(format!("p1 = {p1} exceeds p = {p}")));
    }
    Ok((p - p1) / (1.0 - p1))
}

/// One natural number per cell of a configuration.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn constant(len: usize, degree: usize) -> Self {
        DegreeSequence(vec![degree; len])
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of entries equal to `i`.
    pub fn count(&self, i: usize) -> usize {
        self.0.iter().filter(|&&d| d == i).count()
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> Self {
        DegreeSequence(v)
    }
}

/// Cells of half-edges plus a perfect matching on all half-edges.
///
/// Cell `i` owns the contiguous half-edge range `cell(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    offsets: Vec<usize>,
    owner: Vec<usize>,
    partner: Vec<usize>,
}

impl Configuration {
    /// Validates that `partner` is a fixed-point-free involution on
    /// `0..sum(degrees)`.
    pub fn new(degrees: &DegreeSequence, partner: Vec<usize>) -> Result<Self> {
        let total = degrees.total();
        if partner.len() != total {
            return Err(Error::Validation(format!("matching covers {} half-edges, cells hold {total}", partner.len())));
        }
        for (h, &q) in partner.iter().enumerate() {
            if q >= total || q == h || partner[q] != h {
                return Err(Error::Validation(format!("half-edge {h} is not properly matched")));
            }
        }
        Ok(Self::from_parts(degrees, partner))
    }

    fn from_parts(degrees: &DegreeSequence, partner: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(degrees.len() + 1);
        offsets.push(0);
        let mut owner = Vec::with_capacity(partner.len());
        for (i, &d) in degrees.0.iter().enumerate() {
            offsets.push(offsets[i] + d);
            owner.extend(std::iter::repeat_n(i, d));
        }
        Configuration { offsets, owner, partner }
    }

    /// The configuration read off a multigraph: half-edges are handed out
    /// cell by cell in edge order, a loop taking two from the same cell.
    pub fn from_multigraph(g: &MultiGraph) -> Self {
        let degrees = DegreeSequence((0..g.n()).map(|v| g.degree(v)).collect());
        let mut next: Vec<usize> = Vec::with_capacity(g.n());
        let mut acc = 0;
        for &d in &degrees.0 {
            next.push(acc);
            acc += d;
        }
        let mut partner = vec![0; acc];
        for &(u, v) in g.edges() {
            let a = next[u];
            next[u] += 1;
            let b = next[v];
            next[v] += 1;
            partner[a] = b;
            partner[b] = a;
        }
        Self::from_parts(&degrees, partner)
    }

    pub fn cell_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn half_edge_count(&self) -> usize {
        self.partner.len()
    }

    pub fn cell(&self, i: usize) -> Range<usize> {
        self.offsets[i]..self.offsets[i + 1]
    }

    pub fn cell_of(&self, h: usize) -> usize {
        self.owner[h]
    }

    pub fn partner(&self, h: usize) -> usize {
        self.partner[h]
    }

    pub fn matching(&self) -> &[usize] {
        &self.partner
    }

    pub fn degrees(&self) -> DegreeSequence {
        DegreeSequence((0..self.cell_count()).map(|i| self.cell(i).len()).collect())
    }

    /// Matching pairs `(a, b)` with `a < b`, ordered by `a`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner.iter().enumerate().filter(|(a, b)| a < b).map(|(a, &b)| (a, b))
    }

    /// `G(W, M)`: one vertex per cell, one edge per matched pair.
    pub fn multigraph(&self) -> MultiGraph {
        let edges = self.pairs().map(|(a, b)| (self.owner[a], self.owner[b])).collect();
        MultiGraph::from_vec(self.cell_count(), edges)
    }
}

/// Free-function alias for [`Configuration::multigraph`].
pub fn multigraph_of(c: &Configuration) -> MultiGraph {
    c.multigraph()
}

/// Uniform configuration: Fisher-Yates shuffle of the half-edges, then
/// consecutive pairing.
pub fn sample_configuration(d: &DegreeSequence, seed: impl Into<Seed>) -> Result<Configuration> {
    let mut rng = seed.into().rng();
    sample_configuration_with(d, &mut rng)
}

pub(crate) fn sample_configuration_with<R: Rng + ?Sized>(d: &DegreeSequence, rng: &mut R) -> Result<Configuration> {
    let total = d.total();
    if total % 2 == 1 {
        return Err(Error::argument(format!("degree sequence has odd half-edge total {total}")));
    }
    let mut order: Vec<usize> = (0..total).collect();
    order.shuffle(rng);
    let mut partner = vec![0; total];
    for pair in order.chunks_exact(2) {
        partner[pair[0]] = pair[1];
        partner[pair[1]] = pair[0];
    }
    Ok(Configuration::from_parts(d, partner))
}

/// `G*(m, k)`: the configuration-model random `k`-regular multigraph.
pub fn sample_random_regular(m: usize, k: usize, seed: impl Into<Seed>) -> Result<MultiGraph> {
    Ok(sample_configuration(&DegreeSequence::constant(m, k), seed)?.multigraph())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn child_seeds_are_stable_and_distinct() {
        assert_eq!(child_seed(42, 7), child_seed(42, 7));
        assert_ne!(child_seed(42, 7), child_seed(42, 8));
        assert_ne!(child_seed(42, 7), child_seed(43, 7));
        assert_eq!(Seed(42).child(7), Seed(child_seed(42, 7)));
    }

    #[test]
    fn gnp_extremes() {
        assert_eq!(sample_gnp(10, 0.0, 1).unwrap(), Graph::edgeless(10));
        assert_eq!(sample_gnp(10, 1.0, 1).unwrap(), Graph::complete(10));
        assert!(sample_gnp(10, 1.5, 1).is_err());
        assert!(sample_gnp(10, -0.1, 1).is_err());
    }

    #[test]
    fn gnp_is_deterministic() {
        let a = sample_gnp(500, 0.01, 99).unwrap();
        let b = sample_gnp(500, 0.01, 99).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_gnp(500, 0.01, 100).unwrap());
    }

    #[test]
    fn sprinkle_examples() {
        assert_eq!(sprinkle_complement(0.3, 0.3).unwrap(), 0.0);
        assert_eq!(sprinkle_complement(0.3, 0.0).unwrap(), 0.3);
        assert!((sprinkle_complement(0.5, 0.25).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert!(sprinkle_complement(0.3, 0.4).is_err());
        assert!(sprinkle_complement(1.0, 1.0).is_err());
    }

    #[test]
    fn forced_configurations() {
        let c = sample_configuration(&DegreeSequence(vec![1, 1]), 3).unwrap();
        assert_eq!(c.multigraph().edges(), &[(0, 1)]);
        let c = sample_configuration(&DegreeSequence(vec![2]), 3).unwrap();
        assert_eq!(c.multigraph().edges(), &[(0, 0)]);
        assert!(sample_configuration(&DegreeSequence(vec![1, 2]), 3).is_err());
    }

    #[test]
    fn configuration_validation() {
        let d = DegreeSequence(vec![2, 2]);
        assert!(Configuration::new(&d, vec![1, 0, 3, 2]).is_ok());
        assert!(Configuration::new(&d, vec![0, 1, 3, 2]).is_err());
        assert!(Configuration::new(&d, vec![1, 2, 3, 0]).is_err());
        assert!(Configuration::new(&d, vec![1, 0]).is_err());
    }

    #[test]
    fn from_multigraph_round_trips() {
        let m = MultiGraph::new(3, [(0, 1), (1, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        let c = Configuration::from_multigraph(&m);
        assert_eq!(c.degrees().0, vec![3, 5, 2]);
        assert_eq!(c.multigraph(), m);
    }
}
