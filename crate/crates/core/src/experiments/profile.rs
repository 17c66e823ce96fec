use num_rational::Ratio;

use crate::graph::EdgeView;

/// Degree counts of a graph and its branching ratio
/// `lambda = sum_i D_i i (i - 1) / (2 sum_i D_i i)` over degrees `i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    /// `counts[i]` vertices of degree `i`, for every degree that occurs.
    pub counts: Vec<usize>,
    /// `None` when no vertex has degree at least 2.
    pub lambda: Option<Ratio<u64>>,
}

impl DegreeProfile {
    /// `D_i`.
    pub fn d(&self, i: usize) -> usize {
        self.counts.get(i).copied().unwrap_or(0)
    }

    /// `sum_{i >= 4} i D_i`.
    pub fn heavy_weight(&self) -> usize {
        self.counts.iter().enumerate().skip(4).map(|(i, &c)| i * c).sum()
    }
}

pub fn degree_profile<G: EdgeView + ?Sized>(g: &G) -> DegreeProfile {
    let mut counts = Vec::new();
    for v in 0..g.vertex_count() {
        let d = g.degree(v);
        if counts.len() <= d {
            counts.resize(d + 1, 0);
        }
        counts[d] += 1;
    }
    let (mut num, mut den) = (0u64, 0u64);
    for (i, &c) in counts.iter().enumerate().skip(2) {
        let (i, c) = (i as u64, c as u64);
        num += c * i * (i - 1);
        den += 2 * c * i;
    }
    let lambda = (den > 0).then(|| Ratio::new(num, den));
    DegreeProfile { counts, lambda }
}
