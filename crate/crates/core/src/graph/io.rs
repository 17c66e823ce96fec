//! Edge-list text format: a header line `n m`, then `m` lines `u v`.
//! Multigraphs repeat lines for parallel edges and write loops as `v v`.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{Graph, MultiGraph};
use crate::error::{Error, Result};

fn parse_pair<T: FromStr>(line: &str, lineno: usize) -> Result<(T, T)> {
    let mut it = line.split_whitespace();
    let mut next = |what: &str| -> Result<T> {
        it.next()
            .ok_or_else(|| Error::Parse { line: lineno, msg: format!("missing {what}") })?
            .parse()
            .map_err(|_| Error::Parse { line: lineno, msg: format!("{what} is not a natural number") })
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(Error::Parse { line: lineno, msg: "expected exactly two fields".into() });
    }
    Ok((a, b))
}

fn parse_edges(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (lineno, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let (n, m): (usize, usize) = parse_pair(header, lineno)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if line.is_empty() {
            continue;
        }
        if edges.len() == m {
            return Err(Error::Parse { line: lineno, msg: format!("more than the declared {m} edges") });
        }
        edges.push(parse_pair(line, lineno)?);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Ok((n, edges))
}

fn write_edges(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = String::with_capacity(16 * (edges.len() + 1));
    writeln!(out, "{n} {}", edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses a simple graph; loops or duplicate edges are errors.
pub fn read_graph(text: &str) -> Result<Graph> {
    let (n, edges) = parse_edges(text)?;
    Graph::new(n, edges)
}

/// Serializes in canonical order (`u < v`, sorted).
pub fn write_graph(g: &Graph) -> String {
    write_edges(g.n(), g.edges())
}

/// Parses a multigraph, preserving line order as edge order.
pub fn read_multigraph(text: &str) -> Result<MultiGraph> {
    let (n, edges) = parse_edges(text)?;
    MultiGraph::new(n, edges)
}

pub fn write_multigraph(g: &MultiGraph) -> String {
    write_edges(g.n(), g.edges())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip_is_bit_exact() {
        let g = Graph::new(5, [(3, 1), (0, 4), (1, 2)]).unwrap();
        let text = write_graph(&g);
        assert_eq!(text, "5 3\n0 4\n1 2\n1 3\n");
        assert_eq!(write_graph(&read_graph(&text).unwrap()), text);
    }

    #[test]
    fn multigraph_keeps_order_loops_and_multiplicity() {
        let text = "3 4\n2 2\n0 1\n1 0\n0 1\n";
        let m = read_multigraph(text).unwrap();
        assert_eq!(m.loop_count(), 1);
        assert_eq!(m.extra_parallel_count(), 2);
        assert_eq!(write_multigraph(&m), text);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(read_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(read_graph("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_graph("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(read_graph("3 1\n0 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(read_graph("3 1\n1 1\n"), Err(Error::Argument(_))));
        assert!(matches!(read_graph("3 1\n1 5\n"), Err(Error::Range { .. })));
    }
}
