use thiserror::Error;

/// Errors shared by the exact and numeric layers.
///
/// `Parse` means the input text could not be understood at all; the remaining
/// variants mean the input was understood but lies outside the domain of the
/// requested operation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("divergent series: {0}")]
    Divergent(String),

    #[error("invalid precision settings: {0}")]
    InvalidConfig(String),

    #[error("evaluation point {0} is too close to a pole (the integers)")]
    Pole(String),
}

pub type Result<T> = std::result::Result<T, Error>;
