//! Crate-wide error type.

use thiserror::Error;

use crate::rational::Rational;

/// Errors produced by the solver toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A schedule or permutation does not have one entry per job.
    #[error("dimension mismatch: expected {expected} entries, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// Total resource requirement exceeds total supply; no feasible schedule exists.
    #[error("infeasible instance: total requirement {required} exceeds total supply {available}")]
    Infeasible {
        required: Rational,
        available: Rational,
    },

    /// The brute-force optimum was asked for more jobs than its configured cap.
    #[error("exact solve refused: {n} jobs exceeds the brute-force cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },

    /// Instance data violates a model invariant.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// A job sequence is not a permutation of the instance's jobs.
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    /// A generator configuration violates its invariants.
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),

    /// A schedule handed to the just-in-time transformation is not a staircase.
    #[error("not a staircase schedule: gap before job {job} is smaller than its processing time")]
    NotStaircase { job: usize },

    /// The tight-family parameter is outside its validity interval (0, 1/10).
    #[error("epsilon {0} is outside the open interval (0, 1/10)")]
    EpsilonOutOfRange(Rational),

    /// Resource scaling requires a strictly positive factor.
    #[error("scale factor {0} is not positive")]
    NonPositiveScale(Rational),
}

pub type Result<T> = std::result::Result<T, Error>;
