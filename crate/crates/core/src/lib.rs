//! Exact partition counting over arbitrary part sets, and constructive
//! verification of the identities that tie unrestricted, multiplicity-capped,
//! and signed partition numbers together through the solution matrices of
//! `n = sum_i b^i N_i`.
//!
//! Module map:
//! - [`partset`]: the sets `A` of allowed parts (builtin families, explicit
//!   lists, files)
//! - [`counting`]: dynamic-programming count tables for every statistic
//! - [`series`]: truncated formal power series over Z, the generating-function
//!   route to the same numbers
//! - [`solutions`]: enumeration of the solution matrices themselves
//! - [`identities`]: right-hand sides, dual evaluators, verification reports
//! - [`oracle`]: deliberately naive brute-force enumeration that anchors the
//!   fast paths at small `n`
//!
//! The counting, series, and oracle modules implement independent routes to
//! the same values on purpose; the test suites and the `oracle-check` CLI
//! command cross-check them against each other.

pub mod counting;
pub mod identities;
pub mod oracle;
pub mod partset;
pub mod series;
pub mod solutions;

pub use counting::{count, CountError, CountTable, Statistic};
pub use identities::{
    gamma_series, gamma_table, rhs_forward, rhs_inverse, rhs_signed, verify, EvalMode,
    IdentityError, IdentityId, VerificationRecord, VerificationReport, VerifyOptions,
    DEFAULT_ENUMERATION_CAP,
};
pub use oracle::{
    brute_force, brute_force_capped, enumerate_partitions, OracleError, Partition,
    DEFAULT_ORACLE_CAP,
};
pub use partset::{PartSet, PartSetError};
pub use series::{build_gf, factor, product_over_scales, GfStatistic, SeriesError, SeriesZ, Sign};
pub use solutions::{
    count_solutions, enumerate_solutions, gamma_support, SolutionError, SolutionMatrix,
};

use std::fmt;

/// How many times a single part value may repeat inside one partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cap {
    /// No restriction: the classic `p(n)` regime.
    Unbounded,
    /// Each part appears at most this many times. Zero is rejected wherever a
    /// cap is consumed: it would only ever count the empty partition.
    AtMost(u32),
}

impl Cap {
    /// Largest multiplicity actually usable for one part when at most
    /// `budget` copies fit into the remaining total.
    pub fn limit(&self, budget: usize) -> usize {
        match self {
            Cap::Unbounded => budget,
            Cap::AtMost(a) => budget.min(*a as usize),
        }
    }
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cap::Unbounded => write!(f, "inf"),
            Cap::AtMost(a) => write!(f, "{a}"),
        }
    }
}
