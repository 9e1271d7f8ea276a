//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside a function's mathematical domain (x ≤ 0 for ln Γ, …).
    #[error("domain error: {0}")]
    Domain(String),

    /// A bound method was requested below its validity range.
    #[error("method `{method}` is not valid at {param}={value} (valid from {valid_from})")]
    Validity {
        method: &'static str,
        param: &'static str,
        value: i64,
        valid_from: i64,
    },

    /// Basis matrix is (numerically) rank deficient.
    #[error("rank-deficient basis: {0}")]
    RankDeficient(String),

    /// Rank exceeds a desk-scale dimension cap.
    #[error("rank {n} exceeds the cap {cap} for {what}")]
    DimensionCap { n: usize, cap: usize, what: &'static str },

    /// Matrix shape violates an operation's requirements.
    #[error("shape error: {0}")]
    Shape(String),

    /// Malformed basis file or structured document.
    #[error("parse error: {0}")]
    Parse(String),

    /// Unknown figure identifier.
    #[error("unknown figure id: {0}")]
    UnknownFigure(String),

    /// Invalid precision policy (bits < 64, margin_factor < 1, …).
    #[error("invalid precision policy: {0}")]
    Policy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
