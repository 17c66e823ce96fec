//! Shared pieces of the acceptance suite in `tests/acceptance.rs`.
//!
//! Run it with `cargo test -p widthlab-acceptance`. It runs after every
//! `widthlab` test, so a failing criterion never hides other results.

use rand::Rng;
use widthlab::Graph;

/// Collects one line per criterion.
#[derive(Debug, Default)]
pub struct Report {
    pub failed: Vec<String>,
}

impl Report {
    pub fn check(&mut self, id: &str, ok: bool, detail: String) {
        println!("{id} {}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failed.push(id.to_string());
        }
    }
}

/// `G(n, p)` drawn pair by pair from `rng`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Vertex `i > 0` attaches to a uniform earlier vertex.
pub fn random_tree(rng: &mut impl Rng, m: usize) -> Graph {
    Graph::new(m, (1..m).map(|i| (rng.gen_range(0..i), i))).unwrap()
}

/// Whether every component of `G - S` has at most `|V - S| / 2` vertices,
/// by flood fill.
pub fn is_half_separator(g: &Graph, s: &[bool]) -> bool {
    let n = g.n();
    let rest = s.iter().filter(|&&x| !x).count();
    let mut seen = s.to_vec();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut size = 0;
        while let Some(v) = stack.pop() {
            size += 1;
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if 2 * size > rest {
            return false;
        }
    }
    true
}
