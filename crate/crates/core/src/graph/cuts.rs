use num_rational::Ratio;

use super::{component_labels, EdgeView, VertexSet};
use crate::error::{Error, Result};

/// Hard cap on `n` for the exhaustive cut searches (`2^(n-1)` splits).
pub const BRUTE_FORCE_CAP: usize = 24;

/// `d(U)`: sum of degrees over `U`, loops counting twice.
pub fn degree_sum<G: EdgeView + ?Sized>(g: &G, set: &VertexSet) -> Result<usize> {
    set.check_within(g.vertex_count())?;
    Ok(set.iter().map(|v| g.degree(v)).sum())
}

/// `e(A, B)`: edges (with multiplicity) joining `A` to `B`.
pub fn edge_cut<G: EdgeView + ?Sized>(g: &G, a: &VertexSet, b: &VertexSet) -> Result<usize> {
    let n = g.vertex_count();
    a.check_within(n)?;
    b.check_within(n)?;
    if !a.is_disjoint(b) {
        return Err(Error::argument("edge_cut requires disjoint vertex sets"));
    }
    Ok(g.edge_list()
        .iter()
        .filter(|&&(u, v)| (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u)))
        .count())
}

/// `|E| - |V|`. A tree has excess `-1`.
pub fn excess<G: EdgeView + ?Sized>(g: &G) -> i64 {
    g.edge_list().len() as i64 - g.vertex_count() as i64
}

/// Exact Cheeger constant with a minimizing side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cheeger {
    pub value: Ratio<u64>,
    pub argmin: VertexSet,
}

/// Exact bisection width with a minimizing side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bisection {
    pub width: usize,
    pub side: VertexSet,
}

/// Incremental cut bookkeeping for a Gray-code walk over vertex subsets.
struct SplitWalk {
    /// Non-loop neighbours with multiplicity.
    nbrs: Vec<Vec<(usize, i64)>>,
    degree: Vec<u64>,
    non_loop_degree: Vec<i64>,
}

impl SplitWalk {
    fn new<G: EdgeView + ?Sized>(g: &G) -> Self {
        let n = g.vertex_count();
        let mut nbrs: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        let mut non_loop_degree = vec![0i64; n];
        for &(u, v) in g.edge_list() {
            if u == v {
                continue;
            }
            for (a, b) in [(u, v), (v, u)] {
                non_loop_degree[a] += 1;
                match nbrs[a].iter_mut().find(|(w, _)| *w == b) {
                    Some(entry) => entry.1 += 1,
                    None => nbrs[a].push((b, 1)),
                }
            }
        }
        let degree = (0..n).map(|v| g.degree(v) as u64).collect();
        SplitWalk { nbrs, degree, non_loop_degree }
    }

    /// Visits every nonempty `S` inside `0..n-1` (vertex `n-1` stays outside),
    /// reporting `(mask, e(S, S^c), d(S), |S|)`.
    fn for_each(&self, mut visit: impl FnMut(u64, u64, u64, u32)) {
        let n = self.degree.len();
        let free = n - 1;
        let mut mask = 0u64;
        let mut cut: i64 = 0;
        let mut d_s: u64 = 0;
        for step in 1u64..(1u64 << free) {
            let v = step.trailing_zeros() as usize;
            let inside: i64 = self.nbrs[v].iter().filter(|(w, _)| mask >> w & 1 == 1).map(|(_, m)| m).sum();
            if mask >> v & 1 == 0 {
                cut += self.non_loop_degree[v] - 2 * inside;
                d_s += self.degree[v];
            } else {
                cut -= self.non_loop_degree[v] - 2 * inside;
                d_s -= self.degree[v];
            }
            mask ^= 1 << v;
            visit(mask, cut as u64, d_s, mask.count_ones());
        }
    }
}

fn check_cap(what: &'static str, n: usize) -> Result<()> {
    if n > BRUTE_FORCE_CAP {
        Err(Error::Capacity { what, n, cap: BRUTE_FORCE_CAP })
    } else {
        Ok(())
    }
}

/// `min_S e(S, S^c) / min(d(S), d(S^c))` over nonempty proper `S`, exactly.
///
/// Works on multigraphs: parallel edges count with multiplicity and loops add
/// two to the degree but never cross a cut.
pub fn cheeger_exact<G: EdgeView + ?Sized>(g: &G) -> Result<Cheeger> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::domain("Cheeger constant needs at least two vertices"));
    }
    check_cap("cheeger_exact", n)?;
    if component_labels(g).1 != 1 {
        return Err(Error::domain("Cheeger constant needs a connected graph"));
    }
    let total: u64 = (0..n).map(|v| g.degree(v) as u64).sum();
    let walk = SplitWalk::new(g);
    let mut best: Option<(u64, u64, u64)> = None;
    walk.for_each(|mask, cut, d_s, _| {
        let den = d_s.min(total - d_s);
        let better = match best {
            None => true,
            Some((bn, bd, _)) => (cut as u128) * (bd as u128) < (bn as u128) * (den as u128),
        };
        if better {
            best = Some((cut, den, mask));
        }
    });
    let (num, den, mask) = best.expect("n >= 2 gives at least one split");
    Ok(Cheeger { value: Ratio::new(num, den), argmin: VertexSet::from_mask(n, mask) })
}

/// Size window `[ceil(n/3), floor(2n/3)]` for a balanced side.
pub(crate) fn balanced_window(n: usize) -> (usize, usize) {
    (n.div_ceil(3), 2 * n / 3)
}

/// Minimum `e(A, B)` over partitions with `ceil(n/3) <= |A|, |B| <= floor(2n/3)`.
pub fn bisection_width_exact<G: EdgeView + ?Sized>(g: &G) -> Result<Bisection> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::domain("bisection width needs at least two vertices"));
    }
    check_cap("bisection_width_exact", n)?;
    let (lo, hi) = balanced_window(n);
    let walk = SplitWalk::new(g);
    let mut best: Option<(u64, u64)> = None;
    walk.for_each(|mask, cut, _, size| {
        let size = size as usize;
        if size >= lo && size <= hi && best.is_none_or(|(b, _)| cut < b) {
            best = Some((cut, mask));
        }
    });
    let (width, mask) = best.expect("window is nonempty for n >= 2");
    Ok(Bisection { width: width as usize, side: VertexSet::from_mask(n, mask) })
}

/// Crossing-number lower bound `max(0, (b(G)^2 - 4 sum d(v)^2) / 16)`.
pub fn cr_lower_bound<G: EdgeView + ?Sized>(g: &G) -> Result<f64> {
    let b = bisection_width_exact(g)?.width as i128;
    let sq: i128 = (0..g.vertex_count()).map(|v| (g.degree(v) as i128).pow(2)).sum();
    let num = b * b - 4 * sq;
    Ok(if num <= 0 { 0.0 } else { num as f64 / 16.0 })
}
