use thiserror::Error;

/// Failures of the series engine. Every error is a contract violation by
/// the caller or a truncation limit, never a rounding issue.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("coefficient of x^{index} requested but series is only known through x^{precision}")]
    PrecisionExceeded { index: usize, precision: usize },
    #[error("series with zero constant term has no reciprocal")]
    NotInvertible,
    #[error("inner series has nonzero constant term {constant}; composition is not formal")]
    NotComposable { constant: String },
    #[error("series is not regular (needs [x^0] = 0 and [x^1] != 0)")]
    NotRegular,
    #[error("series is zero through x^{precision}; order undefined at this truncation")]
    ZeroAtPrecision { precision: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = SeriesError> = std::result::Result<T, E>;
