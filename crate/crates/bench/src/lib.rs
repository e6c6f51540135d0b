//! Shared workloads for the criterion benches.

use partitions_core::PartSet;

/// An explicit part set with irregular gaps (Fibonacci numbers up to 144).
/// Sparse enough to exercise the sparse-aware series paths, dense enough that
/// the counting tables stay nontrivial at every n.
pub fn gapped_set() -> PartSet {
    PartSet::explicit(vec![1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]).expect("valid explicit set")
}
