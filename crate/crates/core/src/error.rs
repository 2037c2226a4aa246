use alloc::string::String;
use alloc::vec::Vec;

use crate::Complex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// Malformed or out-of-domain input: wrong degree, non-finite values,
    /// inconsistent lengths.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An intermediate or final value left the finite range, or a root
    /// failed its residual bound.
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Durand–Kerner iteration ran out of iterations without meeting the
    /// residual bound. Carries the last iterate.
    #[error(
        "iteration did not converge after {iterations} steps (worst scaled residual {residual:e})"
    )]
    NoConvergence {
        iterations: usize,
        residual: f64,
        best: Vec<Complex>,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }

    /// True for errors caused by the caller's input rather than by arithmetic.
    pub fn is_invalid_input(&self) -> bool {
        matches!(self, Error::InvalidInput(_))
    }
}
