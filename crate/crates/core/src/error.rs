use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("pole of order {order} at the evaluation point; only simple poles are supported")]
    UnsupportedPoleOrder { order: usize },

    #[error("root finder did not converge after {iterations} iterations (max step {max_step:e})")]
    NoConvergence {
        iterations: usize,
        max_step: f64,
        partial: Vec<(f64, f64)>,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("field size {size} exceeds the desk-scale cap {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("unsupported curve model: {0}")]
    UnsupportedModel(String),

    #[error("genus {g} is not supported here: {reason}")]
    UnsupportedGenus { g: usize, reason: &'static str },

    #[error("rank {r} out of range {min}..={max}")]
    RankOutOfRange { r: usize, min: usize, max: usize },

    #[error("normalization check failed: {0}")]
    Normalization(String),

    #[error("expression is not of the expected shape in T = u^r: {0}")]
    Shape(String),

    #[error("Weil bound violated: |a| = {a} > 2*sqrt({q})")]
    WeilBound { q: u64, a: i64 },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

pub type Result<T> = std::result::Result<T, Error>;
