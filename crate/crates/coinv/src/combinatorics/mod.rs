//! Partitions, permutations, r-colored permutations, descent statistics,
//! dominance order, and q-binomial coefficients.
//!
//! Everything here is an immutable value; all operations are pure functions.

mod partition;
mod permutation;
mod qpoly;

pub use partition::{
    descent_partition_from_set, dominance_compare, partitions_of, partitions_of_bounded, Dominance,
    Partition, PartitionClass, RPartition,
};
pub use permutation::{
    all_colored_permutations, all_permutations, ColoredDescents, ColoredPermutation, PermDescents,
    Permutation,
};
pub use qpoly::{q_binomial, QPolynomial};
