//! Error type shared across the library.
//!
//! Only user-reachable failures are surfaced as `Error`; contract
//! violations (mismatched degrees, non-partitions) panic, and internal
//! consistency failures (a kernel of the wrong dimension, an irrational
//! eigenvalue) abort with a diagnostic since they signal a bug rather
//! than bad input.

use crate::partitions::Partition;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Spin covers only exist over all-odd ramification data.
    #[error("ramification partition {partition} is not an odd partition")]
    NonOddRamification { partition: Partition },

    /// A ramification partition must partition the cover degree.
    #[error("ramification partition {partition} has degree {got}, expected {expected}")]
    RamificationDegree {
        partition: Partition,
        expected: u32,
        got: u32,
    },

    /// The sphere carries a unique spin structure and it is even.
    #[error("odd spin parity requires genus >= 1 (the sphere has no odd spin structure)")]
    OddParityOnSphere,

    /// An enumeration or table request exceeded the configured budget.
    #[error("budget exceeded: {what} = {requested} exceeds limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        requested: u64,
        limit: u64,
    },

    /// An unrecognized atom in a cobordism word.
    #[error("invalid cobordism atom {found:?} at byte {offset}")]
    InvalidAtom { offset: usize, found: String },

    /// A cobordism word whose atoms are valid but whose shape is not.
    #[error("malformed cobordism word at byte {offset}: {reason}")]
    MalformedWord { offset: usize, reason: String },
}
