//! Structural extractors: 2-core, kernel, degree-two suppression, local
//! complementation, subdivision resolution and bounded-degree tree growth.

mod core;
mod local;
mod suppress;
mod tree_grow;

pub use self::core::{two_core, two_core_multigraph};
pub use local::{local_complement, resolve_subdivision};
pub use suppress::{kernel, kernel_multigraph, suppress_degree_two, SuppressionMap};
pub use tree_grow::{grow_bounded_degree_tree, GrownTree, GrowthOutcome, TreeGrowthParams};
