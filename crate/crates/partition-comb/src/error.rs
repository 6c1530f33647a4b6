use thiserror::Error;

/// Errors raised by the exact-combinatorics routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    /// Dominance comparison (and anything built on it) is only defined for
    /// partitions of the same total.
    #[error("partitions have different totals: {left} vs {right}")]
    UnequalTotals { left: u64, right: u64 },

    /// The tableau enumerator refuses shapes with more cells than its
    /// backtracking search can handle.
    #[error("tableau shape has {cells} cells, above the enumeration limit {limit}")]
    TableauTooLarge { cells: u64, limit: u64 },

    /// The permutation scan is factorial in the length and is capped.
    #[error("permutation length {length} is above the enumeration limit {limit}")]
    PermutationTooLong { length: usize, limit: usize },
}
