use num_bigint::{BigInt, BigUint};
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{component_labels, Graph};

/// Ordered bipartitions of a tree's vertices by number of crossing edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreePartitionCount {
    /// Ordered pairs `(A, B)`, both nonempty, with at most `k` crossing edges.
    pub total: BigUint,
    /// `by_crossings[i]` counts the same pairs with exactly `i` crossing
    /// edges, for `i` in `0..m`; entry 0 is always zero.
    pub by_crossings: Vec<BigUint>,
}

/// Counts ordered bipartitions `(A, B)` of a tree with both sides nonempty
/// and at most `k` tree edges between them, by dynamic programming over the
/// tree (two colours per vertex, tracking crossings).
pub fn count_tree_partitions(t: &Graph, k: usize) -> Result<TreePartitionCount> {
    let m = t.n();
    if m < 2 {
        return Err(Error::domain("need a tree on at least two vertices"));
    }
    if t.edge_count() != m - 1 || component_labels(t).1 != 1 {
        return Err(Error::domain("input is not a tree"));
    }
    // dp[v][c][i]: colourings of the subtree at v with v coloured c and i
    // crossing edges
    let mut order = Vec::with_capacity(m);
    let mut parent = vec![usize::MAX; m];
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in t.neighbors(v) {
            if parent[w] == usize::MAX {
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    let mut dp: Vec<[Vec<BigUint>; 2]> = vec![[vec![BigUint::one()], vec![BigUint::one()]]; m];
    for &v in order.iter().rev() {
        if v == 0 {
            continue;
        }
        let child = std::mem::take(&mut dp[v]);
        let p = parent[v];
        for (c, cur) in dp[p].iter_mut().enumerate() {
            let mut next = vec![BigUint::zero(); cur.len() + child[0].len()];
            for (i, a) in cur.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in child[c].iter().enumerate() {
                    next[i + j] += a * b;
                }
                for (j, b) in child[1 - c].iter().enumerate() {
                    next[i + j + 1] += a * b;
                }
            }
            *cur = next;
        }
    }
    let mut by_crossings = vec![BigUint::zero(); m];
    for side in &dp[0] {
        for (i, x) in side.iter().enumerate() {
            by_crossings[i] += x;
        }
    }
    // the two colourings with an empty side are the only ones without a crossing
    by_crossings[0] = BigUint::zero();
    let total = by_crossings.iter().take(k + 1).skip(1).sum();
    Ok(TreePartitionCount { total, by_crossings })
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `h(x) = -x log2 x - (1 - x) log2 (1 - x)`, with `h(0) = h(1) = 0`.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::domain(format!("entropy argument {x} outside [0, 1]")));
    }
    let term = |p: f64| if p == 0.0 { 0.0 } else { -p * p.log2() };
    Ok(term(x) + term(1.0 - x))
}

/// `log2 x` for a positive integer, from its top 64 bits.
fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64).log2();
    }
    let top = (x >> (bits - 64)).to_u64().unwrap();
    (top as f64).log2() + (bits - 64) as f64
}

/// Whether `sum_{i=1}^{k} C(m, i) <= 2^(h(k/m) m)`. The left side is exact;
/// the right exponent is rounded up by a relative `1e-12` so floating-point
/// error cannot produce a false failure.
pub fn entropy_bound_holds(m: usize, k: usize) -> Result<bool> {
    if m == 0 || 2 * k > m {
        return Err(Error::domain(format!("need 1 <= m and k <= m / 2, got m = {m}, k = {k}")));
    }
    let lhs: BigUint = (1..=k).map(|i| binomial(m, i)).sum();
    if lhs.is_zero() {
        return Ok(true);
    }
    let exponent = binary_entropy(k as f64 / m as f64)? * m as f64;
    let exponent = exponent * (1.0 + 1e-12) + 1e-12;
    Ok(log2_big(&lhs) <= exponent)
}

/// `E[min(Bin(n, p), cap)]`, exactly, via
/// `cap - sum_{j < cap} (cap - j) P(X = j)`.
pub fn truncated_binomial_mean(n: usize, p: Ratio<u64>, cap: usize) -> Result<BigRational> {
    if p > Ratio::from_integer(1) {
        return Err(Error::domain(format!("probability {p} exceeds 1")));
    }
    let a = BigInt::from(*p.numer());
    let b = BigInt::from(*p.denom());
    let q = &b - &a;
    let mut deficit = BigInt::zero();
    for j in 0..cap.min(n + 1) {
        let c = BigInt::from(binomial(n, j));
        deficit += BigInt::from(cap - j) * c * a.pow(j as u32) * q.pow((n - j) as u32);
    }
    let denom = b.pow(n as u32);
    Ok(BigRational::from_integer(BigInt::from(cap)) - BigRational::new(deficit, denom))
}

/// Checks `E[min(Bin(n, p), cap)] >= np - cap 2^-cap`. Returns `None` when
/// `2 e n p >= cap`, where the inequality is not claimed.
pub fn truncated_binomial_bound_holds(n: usize, p: Ratio<u64>, cap: usize) -> Result<Option<bool>> {
    let np = Ratio::new(BigInt::from(n as u64) * BigInt::from(*p.numer()), BigInt::from(*p.denom()));
    let np_f = n as f64 * (*p.numer() as f64 / *p.denom() as f64);
    if 2.0 * std::f64::consts::E * np_f >= cap as f64 {
        return Ok(None);
    }
    let mean = truncated_binomial_mean(n, p, cap)?;
    let slack = BigRational::new(BigInt::from(cap), BigInt::from(2u8).pow(cap as u32));
    Ok(Some(mean >= np - slack))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn partition_examples() {
        let edge = Graph::path(2);
        assert_eq!(count_tree_partitions(&edge, 1).unwrap().total, big(2));
        let p3 = Graph::path(3);
        let c = count_tree_partitions(&p3, 1).unwrap();
        assert_eq!(c.total, big(4));
        assert_eq!(c.by_crossings, vec![big(0), big(4), big(2)]);
        assert_eq!(count_tree_partitions(&Graph::star(4), 0).unwrap().total, big(0));
        assert!(count_tree_partitions(&Graph::cycle(4), 1).is_err());
        assert!(count_tree_partitions(&Graph::edgeless(1), 1).is_err());
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert!(binary_entropy(1.5).is_err());
        let lhs: BigUint = (1..=5).map(|i| binomial(10, i)).sum();
        assert_eq!(lhs, big(637));
        assert!(entropy_bound_holds(10, 5).unwrap());
        assert!(entropy_bound_holds(10, 6).is_err());
        assert!(entropy_bound_holds(200, 100).unwrap());
    }

    #[test]
    fn binomial_examples() {
        let r = |a: i64, b: i64| BigRational::new(BigInt::from(a), BigInt::from(b));
        assert_eq!(truncated_binomial_mean(2, Ratio::new(1, 2), 1).unwrap(), r(3, 4));
        assert_eq!(truncated_binomial_mean(5, Ratio::new(1, 3), 5).unwrap(), r(5, 3));
        assert_eq!(truncated_binomial_mean(5, Ratio::new(1, 3), 9).unwrap(), r(5, 3));
        let v = truncated_binomial_mean(100, Ratio::new(1, 100), 6).unwrap();
        assert!(v >= r(90625, 100000));
        assert_eq!(truncated_binomial_bound_holds(100, Ratio::new(1, 100), 6).unwrap(), Some(true));
        assert_eq!(truncated_binomial_bound_holds(100, Ratio::new(1, 100), 5).unwrap(), None);
    }
}
