//! Error types shared across the crate.

use std::fmt;

/// Errors reported by construction, solving and analysis routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input lies outside the valid numeric domain of a formula.
    Domain(String),
    /// `alternation_profile` was handed a norm inconsistent with the actual
    /// maximum of `|p|` on the interval.
    DegenerateNorm { expected: f64, observed: f64 },
    /// The requested constraint is outside the proper regime.
    OutOfRange(String),
    /// An iteration failed to converge within its cap.
    NoConvergence(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::DegenerateNorm { expected, observed } => write!(
                f,
                "degenerate norm: caller claimed {expected}, observed max {observed}"
            ),
            Error::OutOfRange(msg) => write!(f, "out of range: {msg}"),
            Error::NoConvergence(msg) => write!(f, "no convergence: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
