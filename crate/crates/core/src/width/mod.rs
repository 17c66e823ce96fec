//! Exact width parameters and the counting utilities used alongside them.

mod bitmatrix;
mod counting;
mod rankwidth;
mod separator;
mod treewidth;

pub use bitmatrix::{cutrank, gf2_rank, BitMatrix};
pub use counting::{
    binary_entropy, binomial, count_tree_partitions, entropy_bound_holds, truncated_binomial_bound_holds,
    truncated_binomial_mean, TreePartitionCount,
};
pub use rankwidth::{rankwidth_exact, RankDecomposition, RANKWIDTH_CAP};
pub use separator::{balanced_partition_from_separator, sep_alpha_exact, BalancedPartition, SEPARATOR_CAP};
pub use treewidth::{treewidth_exact, TreeDecomposition, TREEWIDTH_CAP};
