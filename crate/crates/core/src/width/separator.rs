use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{edge_cut, Graph, VertexSet};

pub const SEPARATOR_CAP: usize = 20;

/// Vertices split as `A`, `S`, `B` with no edge between `A` and `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalancedPartition {
    pub a: VertexSet,
    pub s: VertexSet,
    pub b: VertexSet,
}

impl BalancedPartition {
    /// Checks disjointness, coverage, `e(A, B) = 0` and
    /// `ceil(r / 3) <= |A|, |B| <= floor(2r / 3)` with `r = |V - S|`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        for part in [&self.a, &self.s, &self.b] {
            if part.universe() != n {
                return Err("part has the wrong universe".into());
            }
        }
        if !self.a.is_disjoint(&self.s) || !self.a.is_disjoint(&self.b) || !self.s.is_disjoint(&self.b) {
            return Err("parts overlap".into());
        }
        if self.a.len() + self.s.len() + self.b.len() != n {
            return Err("parts do not cover the vertices".into());
        }
        let cut = edge_cut(g, &self.a, &self.b).map_err(|e| e.to_string())?;
        if cut != 0 {
            return Err(format!("{cut} edges join A and B"));
        }
        let r = n - self.s.len();
        let (lo, hi) = (r.div_ceil(3), 2 * r / 3);
        for (name, part) in [("A", &self.a), ("B", &self.b)] {
            if part.len() < lo || part.len() > hi {
                return Err(format!("|{name}| = {} outside [{lo}, {hi}]", part.len()));
            }
        }
        Ok(())
    }
}

/// Components of `g` minus `removed`, as masks, largest first (ties by
/// smallest vertex).
pub(crate) fn components_avoiding(adj: &[u64], removed: u64) -> Vec<u64> {
    let n = adj.len();
    let mut left = if n == 64 { u64::MAX } else { (1u64 << n) - 1 } & !removed;
    let mut comps = Vec::new();
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let mut nb = 0;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                nb |= adj[u];
            }
            frontier = nb & left & !comp;
            comp |= frontier;
        }
        comps.push(comp);
        left &= !comp;
    }
    comps.sort_by_key(|c| (std::cmp::Reverse(c.count_ones()), c.trailing_zeros()));
    comps
}

fn is_separator(adj: &[u64], s: u64, alpha: Ratio<u64>, n: usize) -> bool {
    let rest = (n - s.count_ones() as usize) as u64;
    components_avoiding(adj, s).first().is_none_or(|&c| c.count_ones() as u64 * alpha.denom() <= alpha.numer() * rest)
}

/// Smallest `S` such that every component of `G - S` has at most
/// `alpha * |V - S|` vertices. `S = V` always qualifies.
pub fn sep_alpha_exact(g: &Graph, alpha: Ratio<u64>) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if n > SEPARATOR_CAP {
        return Err(Error::Capacity { what: "separator search", n, cap: SEPARATOR_CAP });
    }
    if *alpha.numer() == 0 || alpha > Ratio::from_integer(1) {
        return Err(Error::argument(format!("alpha = {alpha} must lie in (0, 1]")));
    }
    let adj = g.adjacency_masks();
    for k in 0..=n {
        // subsets of size k in increasing numeric order (Gosper's hack)
        let mut s: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
        let limit = 1u64 << n;
        while s < limit {
            if is_separator(&adj, s, alpha, n) {
                return Ok((k, VertexSet::from_mask(n, s)));
            }
            if s == 0 {
                break;
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("S = V is always a separator")
}

/// Splits the components of `G - S` into `A` and `B`: components in
/// non-increasing order of size go to `A` until `A` reaches a third of
/// `|V - S|`, the rest go to `B`.
pub fn balanced_partition_from_separator(g: &Graph, s: &VertexSet) -> Result<BalancedPartition> {
    let n = g.n();
    s.check_within(n)?;
    if n > 64 {
        return Err(Error::Capacity { what: "balanced partition", n, cap: 64 });
    }
    let rest = n - s.len();
    if rest == 0 {
        return Err(Error::domain("separator covers every vertex"));
    }
    let adj = g.adjacency_masks();
    let comps = components_avoiding(&adj, s.to_mask());
    if 2 * comps[0].count_ones() as usize > rest {
        return Err(Error::domain(format!("a component of {} vertices exceeds half of {rest}", comps[0].count_ones())));
    }
    let mut a = 0u64;
    let mut taken = 0;
    for &c in &comps {
        if 3 * a.count_ones() as usize >= rest {
            break;
        }
        a |= c;
        taken += 1;
    }
    let b = comps[taken..].iter().fold(0, |acc, c| acc | c);
    Ok(BalancedPartition { a: VertexSet::from_mask(n, a), s: s.clone(), b: VertexSet::from_mask(n, b) })
}
