use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of edges touching the `ceil(delta / ln(1/delta) * n)` vertices of
/// highest degree (ties broken towards lower index).
pub fn high_degree_incidence(g: &Graph, delta: f64) -> Result<usize> {
    if !(delta > 0.0 && delta < (-1.0f64).exp()) {
        return Err(Error::domain(format!("delta = {delta} must lie in (0, 1/e)")));
    }
    let n = g.n();
    let size = ((delta / (1.0 / delta).ln()) * n as f64).ceil() as usize;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut chosen = vec![false; n];
    for &v in order.iter().take(size) {
        chosen[v] = true;
    }
    Ok(g.edges().iter().filter(|&&(u, v)| chosen[u] || chosen[v]).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(high_degree_incidence(&Graph::edgeless(100), 0.05).unwrap(), 0);
        // ceil(0.05 / ln 20 * 10) = 1, the centre
        assert_eq!(high_degree_incidence(&Graph::star(9), 0.05).unwrap(), 9);
        assert!(high_degree_incidence(&Graph::star(9), 0.5).is_err());
        // two top vertices of a path share one edge: 3 edges touched
        let g = Graph::path(6);
        assert_eq!(high_degree_incidence(&g, 0.3).unwrap(), 3);
    }
}
