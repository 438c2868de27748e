use thiserror::Error;

/// Errors raised by the sum engines and the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd({h}, {k}) != 1: multiplier is not coprime to the modulus")]
    NotCoprime { h: i64, k: u64 },

    #[error("period mismatch: {left} vs {right}")]
    PeriodMismatch { left: u64, right: u64 },

    #[error("parity violation: {0}")]
    ParityViolation(String),

    #[error("cot(pi*{a}/{k}) is a pole: {k} divides {a}")]
    PoleAtIntegerMultiple { a: i64, k: u64 },

    #[error("tan(pi*{a}/{k}) is a pole: {a} is congruent to k/2 mod {k}")]
    PoleAtHalfPeriod { a: i64, k: u64 },

    #[error("outside the convergence domain: {0}")]
    ConvergenceDomain(String),

    #[error("argument must be positive: {0}")]
    NonPositiveArgument(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("periodic map is not odd")]
    NotOdd,

    #[error("periodic map does not sum to zero over a period")]
    NotMeanZero,

    #[error("enumeration needs {terms} terms, above the work limit {limit}")]
    WorkLimit { terms: u128, limit: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by parameters that violate an identity's hypotheses.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotCoprime { .. }
                | Error::ParityViolation(_)
                | Error::PeriodMismatch { .. }
                | Error::ConvergenceDomain(_)
                | Error::NotOdd
                | Error::NotMeanZero
                | Error::OutOfRange(_)
                | Error::NonPositiveArgument(_)
                | Error::InvalidArgument(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
