//! Width parameters of sparse random graphs.
//!
//! `widthlab` bundles exact (exponential-time, small-`n`) solvers for
//! tree-width, rank-width, separators, Cheeger constants and bisection
//! width, together with the structural machinery needed to study the giant
//! component of `G(n, p)` just above the critical point:
//!
//! * [`graph`]: simple graphs, multigraphs, vertex sets, cuts and expansion.
//! * [`random`]: seeded `G(n, p)`, sprinkling and the configuration model.
//! * [`structure`]: 2-core, kernel, degree-two suppression, local
//!   complementation and a bounded-degree tree grower.
//! * [`coupling`]: deterministic extraction of a cubic configuration that is
//!   an induced topological minor of a min-degree-2 configuration.
//! * [`width`]: GF(2) cutrank and exact width solvers with witnesses.
//! * [`experiments`]: the Monte Carlo harness writing deterministic CSV.
//! * [`cli`]: the `widthlab` command line front end.
//!
//! Every sampler takes an explicit 64-bit seed; see [`random::Seed`].

pub mod cli;
pub mod coupling;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod random;
pub mod structure;
pub mod width;

pub use error::{Error, Result};
pub use graph::{EdgeView, Graph, MultiGraph, VertexSet};
