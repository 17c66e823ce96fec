//! Refining a configuration of minimum degree two into a cubic configuration
//! that is an induced topological minor of the original multigraph.
//!
//! The procedure takes a fully sampled configuration and is a deterministic
//! function of it:
//!
//! 1. expose every matching edge at a half-edge in a cell of degree at least 4;
//! 2. while some cell has exactly one unexposed half-edge (a leaf), expose the
//!    matching edge at the lowest such half-edge;
//! 3. while some current cell has size two, take the one holding the lowest
//!    half-edge `e` and contract the matching edge `{e, f}`: the cell of `e`
//!    and the cell of `f` are replaced by their union minus `{e, f}`. If `f`
//!    lies in the same cell, the cell disappears.
//!
//! The cells left after step 2 all have size two or three. Contraction never
//! changes the number of size-three cells, so the result is a configuration in
//! which every cell has size three.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::random::{Configuration, DegreeSequence};
use crate::structure::suppress_degree_two;

/// One contraction of the third step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Contraction {
    /// Lowest half-edge of the size-two cell.
    pub e: usize,
    /// Its partner.
    pub f: usize,
    /// Current cell of `e`, named by its smallest input cell.
    pub cell: usize,
    /// Current cell of `f`; `None` when `f` is in the same cell and the cell
    /// is annihilated.
    pub target: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExtractionTrace {
    /// Matching edges exposed at cells of degree at least 4, as `(e, partner)`.
    pub s1: Vec<(usize, usize)>,
    /// Matching edges exposed at leaves, as `(leaf, partner)`.
    pub s2: Vec<(usize, usize)>,
    pub s3: Vec<Contraction>,
    /// For each output cell, the input cells merged into it, ascending.
    pub cell_history: Vec<Vec<usize>>,
    /// Output half-edge to input half-edge.
    pub half_edge_map: Vec<usize>,
}

impl ExtractionTrace {
    pub fn is_empty(&self) -> bool {
        self.s1.is_empty() && self.s2.is_empty() && self.s3.is_empty()
    }

    /// Line-oriented audit log: `S1 e f`, `S2 e f`, `S3 e f merge i j`, with
    /// `-` for the target of an annihilating contraction.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for &(e, f) in &self.s1 {
            writeln!(out, "S1 {e} {f}").unwrap();
        }
        for &(e, f) in &self.s2 {
            writeln!(out, "S2 {e} {f}").unwrap();
        }
        for c in &self.s3 {
            match c.target {
                Some(j) => writeln!(out, "S3 {} {} merge {} {j}", c.e, c.f, c.cell).unwrap(),
                None => writeln!(out, "S3 {} {} merge {} -", c.e, c.f, c.cell).unwrap(),
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extraction {
    /// Number of output cells.
    pub m: usize,
    pub cubic: Configuration,
    pub trace: ExtractionTrace,
}

/// `D_3 - sum_{i >= 4} i D_i`, the guaranteed number of output cells.
pub fn cubic_lower_bound(d: &DegreeSequence) -> i64 {
    d.count(3) as i64 - heavy_weight(d) as i64
}

/// `sum_{i >= 4} i D_i`.
pub fn heavy_weight(d: &DegreeSequence) -> usize {
    d.0.iter().filter(|&&k| k >= 4).sum()
}

fn check_input(c: &Configuration, d: &DegreeSequence) -> Result<()> {
    if c.degrees() != *d {
        return Err(Error::Validation("degree sequence does not match the configuration".into()));
    }
    if let Some((i, &k)) = d.0.iter().enumerate().find(|(_, &k)| k < 2) {
        return Err(Error::domain(format!("cell {i} has degree {k} < 2")));
    }
    Ok(())
}

struct Exposure<'a> {
    c: &'a Configuration,
    exposed: Vec<bool>,
    /// Unexposed half-edges per input cell.
    open: Vec<usize>,
    leaves: BTreeSet<usize>,
    touched_cubic: usize,
}

impl Exposure<'_> {
    fn expose(&mut self, e: usize) -> (usize, usize) {
        let f = self.c.partner(e);
        for h in [e, f] {
            debug_assert!(!self.exposed[h]);
            self.exposed[h] = true;
            self.leaves.remove(&h);
            let cell = self.c.cell_of(h);
            let range = self.c.cell(cell);
            if range.len() == 3 && self.open[cell] == 3 {
                self.touched_cubic += 1;
            }
            self.open[cell] -= 1;
        }
        for h in [e, f] {
            let cell = self.c.cell_of(h);
            if self.open[cell] == 1 {
                let last = self.c.cell(cell).find(|&x| !self.exposed[x]).unwrap();
                self.leaves.insert(last);
            }
        }
        (e, f)
    }
}

/// Current cells during contraction, kept as a union-find over input cells.
struct Cells {
    parent: Vec<usize>,
    members: Vec<Vec<usize>>,
    size_two: BTreeSet<(usize, usize)>,
}

impl Cells {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn key(&self, root: usize) -> (usize, usize) {
        (*self.members[root].iter().min().unwrap(), root)
    }
}

/// Runs the three exposure steps on `c`; see the module docs.
pub fn extract_cubic(c: &Configuration, d: &DegreeSequence) -> Result<Extraction> {
    check_input(c, d)?;
    let s = c.cell_count();
    let heavy = heavy_weight(d);
    let mut ex = Exposure {
        c,
        exposed: vec![false; c.half_edge_count()],
        open: d.0.clone(),
        leaves: BTreeSet::new(),
        touched_cubic: 0,
    };
    let mut trace = ExtractionTrace::default();

    for cell in 0..s {
        if d.0[cell] >= 4 {
            for h in c.cell(cell) {
                if !ex.exposed[h] {
                    trace.s1.push(ex.expose(h));
                }
            }
        }
    }
    loop {
        assert!(
            ex.touched_cubic + ex.leaves.len() <= heavy,
            "counting invariant broken: {} touched + {} leaves > {heavy}",
            ex.touched_cubic,
            ex.leaves.len()
        );
        let Some(&e) = ex.leaves.first() else { break };
        trace.s2.push(ex.expose(e));
    }

    let exposed = ex.exposed;
    let w2_size = ex.open;
    debug_assert!(w2_size.iter().all(|&k| k == 0 || k == 2 || k == 3));

    let mut cells = Cells {
        parent: (0..s).collect(),
        members: (0..s).map(|i| c.cell(i).filter(|&h| !exposed[h]).collect()).collect(),
        size_two: BTreeSet::new(),
    };
    for (i, &size) in w2_size.iter().enumerate() {
        if size == 2 {
            let key = cells.key(i);
            cells.size_two.insert(key);
        }
    }
    while let Some((e, a)) = cells.size_two.pop_first() {
        let f = c.partner(e);
        let b = cells.find(c.cell_of(f));
        let size_two_before = cells.size_two.len() + 1;
        if a == b {
            cells.members[a].clear();
            trace.s3.push(Contraction { e, f, cell: a, target: None });
        } else {
            let b_size = cells.members[b].len();
            if b_size == 2 {
                let key = cells.key(b);
                cells.size_two.remove(&key);
            }
            let mut merged: Vec<usize> = std::mem::take(&mut cells.members[a]);
            merged.retain(|&h| h != e);
            merged.extend(cells.members[b].iter().copied().filter(|&h| h != f));
            cells.members[b].clear();
            let root = a.min(b);
            cells.parent[a] = root;
            cells.parent[b] = root;
            assert_eq!(merged.len(), b_size, "contraction must keep the size of the target");
            cells.members[root] = merged;
            if b_size == 2 {
                let key = cells.key(root);
                cells.size_two.insert(key);
            }
            trace.s3.push(Contraction { e, f, cell: a, target: Some(b) });
        }
        assert_eq!(cells.size_two.len() + 1, size_two_before, "contraction must remove one size-two cell");
    }

    // Each surviving cell holds exactly one input cell of size three after
    // step 2; order output cells by it.
    let mut anchor_of_root = vec![usize::MAX; s];
    let mut history: Vec<Vec<usize>> = vec![Vec::new(); s];
    for (i, &size) in w2_size.iter().enumerate() {
        if size == 0 {
            continue;
        }
        let r = cells.find(i);
        if cells.members[r].is_empty() {
            continue;
        }
        history[r].push(i);
        if size == 3 {
            assert_eq!(anchor_of_root[r], usize::MAX, "two size-three cells merged");
            anchor_of_root[r] = i;
        }
    }
    let mut roots: Vec<usize> = (0..s).filter(|&r| cells.parent[r] == r && !cells.members[r].is_empty()).collect();
    roots.sort_by_key(|&r| anchor_of_root[r]);
    let m = roots.len();
    let mut half_edge_map = Vec::with_capacity(3 * m);
    for &r in &roots {
        assert_eq!(cells.members[r].len(), 3);
        let mut hs = cells.members[r].clone();
        hs.sort_unstable();
        half_edge_map.extend(hs);
    }
    let mut new_index = vec![usize::MAX; c.half_edge_count()];
    for (k, &h) in half_edge_map.iter().enumerate() {
        new_index[h] = k;
    }
    let partner: Vec<usize> = half_edge_map.iter().map(|&h| new_index[c.partner(h)]).collect();
    let cubic = Configuration::new(&DegreeSequence::constant(m, 3), partner)?;
    trace.cell_history = roots.iter().map(|&r| std::mem::take(&mut history[r])).collect();
    trace.half_edge_map = half_edge_map;
    Ok(Extraction { m, cubic, trace })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Clause {
    /// Cells left after the leaf step have size two or three.
    CellSizes,
    /// `m` is the number of size-three cells and meets the lower bound.
    CubicCount,
    /// The graph on the cells left after the leaf step is induced.
    Induced,
    /// The output is the degree-two suppression of that induced graph.
    Suppression,
    /// The exposed edges and the output matching partition the input matching.
    Partition,
    /// The output is a well-formed cubic configuration.
    Shape,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Clause::CellSizes => "cell sizes",
            Clause::CubicCount => "cubic count",
            Clause::Induced => "induced subgraph",
            Clause::Suppression => "suppression",
            Clause::Partition => "partition",
            Clause::Shape => "shape",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<(Clause, String)>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn failed(&self, clause: Clause) -> bool {
        self.violations.iter().any(|(c, _)| *c == clause)
    }

    fn fail(&mut self, clause: Clause, msg: impl Into<String>) {
        self.violations.push((clause, msg.into()));
    }
}

/// Rechecks an extraction against its input from the trace alone.
pub fn validate_extraction(c: &Configuration, d: &DegreeSequence, x: &Extraction) -> ValidationReport {
    let mut report = ValidationReport::default();
    if let Err(e) = check_input(c, d) {
        report.fail(Clause::Shape, format!("bad input: {e}"));
        return report;
    }
    let s = c.cell_count();
    let total = c.half_edge_count();
    let t = &x.trace;

    if x.cubic.degrees() != DegreeSequence::constant(x.m, 3) {
        report.fail(Clause::Shape, "output cells are not all of size three or m is wrong");
    }
    if t.half_edge_map.len() != x.cubic.half_edge_count() || t.cell_history.len() != x.cubic.cell_count() {
        report.fail(Clause::Shape, "trace maps do not match the output");
        return report;
    }

    // Partition of the input matching.
    let mut seen = vec![false; total];
    let mark = |seen: &mut [bool], a: usize, b: usize, what: &str, report: &mut ValidationReport| {
        if a >= total || b >= total || c.partner(a) != b {
            report.fail(Clause::Partition, format!("{what} pair ({a}, {b}) is not a matching edge"));
            return;
        }
        for h in [a, b] {
            if seen[h] {
                report.fail(Clause::Partition, format!("half-edge {h} used twice"));
            }
            seen[h] = true;
        }
    };
    for &(a, b) in t.s1.iter().chain(&t.s2) {
        mark(&mut seen, a, b, "exposed", &mut report);
    }
    let after_two: Vec<bool> = seen.clone();
    for k in &t.s3 {
        mark(&mut seen, k.e, k.f, "contracted", &mut report);
    }
    for (a, b) in x.cubic.pairs() {
        let (ha, hb) = (t.half_edge_map[a], t.half_edge_map[b]);
        mark(&mut seen, ha, hb, "output", &mut report);
    }
    if seen.iter().any(|&b| !b) {
        report.fail(Clause::Partition, "some matching edge is unaccounted for");
    }

    // Cells after the leaf step.
    let w2_size: Vec<usize> = (0..s).map(|i| c.cell(i).filter(|&h| !after_two[h]).count()).collect();
    if let Some(i) = w2_size.iter().position(|&k| k == 1 || k > 3) {
        report.fail(Clause::CellSizes, format!("cell {i} has size {}", w2_size[i]));
    }
    let cubic_w2 = w2_size.iter().filter(|&&k| k == 3).count();
    if x.m != cubic_w2 {
        report.fail(Clause::CubicCount, format!("m = {} but {cubic_w2} cells of size three remain", x.m));
    }
    let bound = cubic_lower_bound(d);
    if (x.m as i64) < bound {
        report.fail(Clause::CubicCount, format!("m = {} is below {bound}", x.m));
    }

    let keep = VertexSet::from_indices(s, (0..s).filter(|&i| w2_size[i] > 0)).unwrap();
    for (a, b) in c.pairs() {
        let both = keep.contains(c.cell_of(a)) && keep.contains(c.cell_of(b));
        if both && (after_two[a] || after_two[b]) {
            report.fail(Clause::Induced, format!("edge ({a}, {b}) joins kept cells but was exposed"));
        }
    }

    // Suppressing degree-two vertices of the induced graph gives the output,
    // with output cell k sitting at the size-three cell of its history.
    let induced = c.multigraph().induced(&keep).unwrap();
    let (kernel, map) = suppress_degree_two(&induced.graph, None);
    let kernel_cells: Vec<usize> = map.to_host.iter().map(|&v| induced.to_host[v]).collect();
    let mut anchors = Vec::with_capacity(x.m);
    let mut covered = vec![false; s];
    for (k, hist) in t.cell_history.iter().enumerate() {
        let big: Vec<usize> = hist.iter().copied().filter(|&i| i < s && w2_size[i] == 3).collect();
        if big.len() != 1 {
            report.fail(Clause::Suppression, format!("output cell {k} holds {} size-three cells", big.len()));
            return report;
        }
        anchors.push(big[0]);
        for &i in hist {
            if i >= s || covered[i] || w2_size[i] == 0 {
                report.fail(Clause::Suppression, format!("history of output cell {k} is inconsistent"));
            } else {
                covered[i] = true;
            }
        }
        for r in 3 * k..3 * k + 3 {
            let h = t.half_edge_map[r];
            if h >= total || !hist.contains(&c.cell_of(h)) {
                report.fail(Clause::Suppression, format!("output half-edge {r} lies outside its history"));
            }
        }
    }
    if kernel_cells != anchors {
        report.fail(Clause::Suppression, "branch vertices do not match the output cells");
    } else if kernel != x.cubic.multigraph() {
        report.fail(Clause::Suppression, "suppressed graph differs from the output");
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::sample_configuration;

    fn conf(d: &[usize], partner: &[usize]) -> (Configuration, DegreeSequence) {
        let d = DegreeSequence(d.to_vec());
        (Configuration::new(&d, partner.to_vec()).unwrap(), d)
    }

    #[test]
    fn cubic_input_is_fixed() {
        let d = DegreeSequence::constant(4, 3);
        let c = sample_configuration(&d, 5).unwrap();
        let x = extract_cubic(&c, &d).unwrap();
        assert_eq!(x.m, 4);
        assert_eq!(x.cubic, c);
        assert!(x.trace.is_empty());
        assert!(validate_extraction(&c, &d, &x).is_ok());
    }

    #[test]
    fn lone_loop_is_annihilated() {
        let (c, d) = conf(&[2], &[1, 0]);
        let x = extract_cubic(&c, &d).unwrap();
        assert_eq!(x.m, 0);
        assert_eq!(x.cubic.cell_count(), 0);
        assert_eq!(x.trace.to_text(), "S3 0 1 merge 0 -\n");
        assert!(validate_extraction(&c, &d, &x).is_ok());
    }

    #[test]
    fn three_three_two() {
        // cells {0,1,2} {3,4,5} {6,7}: 0-3, 1-4, 2-6, 7-5, a theta graph with
        // one subdivided edge
        let (c, d) = conf(&[3, 3, 2], &[3, 4, 6, 0, 1, 7, 2, 5]);
        let x = extract_cubic(&c, &d).unwrap();
        assert_eq!(x.m, 2);
        assert_eq!(x.trace.to_text(), "S3 6 2 merge 2 0\n");
        assert_eq!(x.trace.cell_history, vec![vec![0, 2], vec![1]]);
        assert_eq!(x.trace.half_edge_map, vec![0, 1, 7, 3, 4, 5]);
        let g = x.cubic.multigraph();
        assert_eq!(g.canonical_edges(), vec![(0, 1), (0, 1), (0, 1)]);
        assert!(validate_extraction(&c, &d, &x).is_ok());
    }

    #[test]
    fn heavy_cells_validate() {
        let d = DegreeSequence(vec![4, 3, 3, 3, 3, 2, 2, 6, 2]);
        for seed in 0..200 {
            let c = sample_configuration(&d, seed).unwrap();
            let x = extract_cubic(&c, &d).unwrap();
            let r = validate_extraction(&c, &d, &x);
            assert!(r.is_ok(), "seed {seed}: {r:?}");
            assert!(x.m as i64 >= cubic_lower_bound(&d));
        }
    }

    #[test]
    fn tampering_is_detected() {
        let d = DegreeSequence(vec![3, 3, 3, 3, 2, 2]);
        let c = sample_configuration(&d, 11).unwrap();
        let mut x = extract_cubic(&c, &d).unwrap();
        assert!(validate_extraction(&c, &d, &x).is_ok());
        x.m -= 1;
        let r = validate_extraction(&c, &d, &x);
        assert!(r.failed(Clause::CubicCount));
    }

    #[test]
    fn rejects_bad_input() {
        let (c, d) = conf(&[1, 1], &[1, 0]);
        assert!(matches!(extract_cubic(&c, &d), Err(Error::Domain(_))));
        let (c, _) = conf(&[2, 2], &[2, 3, 0, 1]);
        let wrong = DegreeSequence(vec![3, 1]);
        assert!(matches!(extract_cubic(&c, &wrong), Err(Error::Validation(_))));
    }

    #[test]
    fn deterministic() {
        let d = DegreeSequence(vec![5, 3, 3, 2, 2, 3, 4, 2]);
        let c = sample_configuration(&d, 3).unwrap();
        assert_eq!(extract_cubic(&c, &d).unwrap(), extract_cubic(&c, &d).unwrap());
    }
}
