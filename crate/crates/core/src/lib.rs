//! Closed-form root cascades for two families of polynomials that are
//! solvable by nested radicals.
//!
//! * Degree 8: `P(z) = Qγ(Qβ(Qα(z)))`, a composition of three monic
//!   quadratics. Its roots follow from three levels of square roots.
//! * Degree 9: `P(z) = Cβ(Cα(z))`, a composition of two monic cubics. Its
//!   roots follow from two levels of Cardano's formula.
//!
//! For each family the crate provides the forward map from the six family
//! parameters to the polynomial coefficients, the root cascade, the algebraic
//! constraints that characterise the family inside coefficient space, and a
//! gauge-fixed inverse that recovers parameters from coefficients.
//!
//! A Durand–Kerner simultaneous iteration ([`durand_kerner`]) is included as
//! an independent oracle for checking the cascades, and [`corpus`] generates
//! reproducible instance sets.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! ```
//! use nestsolve_core::{deg8, ToleranceConfig};
//! use num_complex::Complex64 as C;
//!
//! // z⁸ − 3z⁴ + 2 = (z⁴ − 1)(z⁴ − 2)
//! let p = deg8::ParamSet8::new(
//!     [C::new(0.0, 0.0), C::new(0.0, 0.0), C::new(0.0, 0.0),
//!      C::new(0.0, 0.0), C::new(2.0, 0.0), C::new(-3.0, 0.0)],
//! ).unwrap();
//! let (roots, _trace) = deg8::solve8(&p, &ToleranceConfig::default()).unwrap();
//! assert_eq!(roots.len(), 8);
//! ```
#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod compose;
pub mod corpus;
pub mod deg8;
pub mod deg9;
mod error;
pub mod matching;
pub mod oracle;
pub mod poly;
pub mod radicals;
mod tolerance;

pub use error::{Error, Result};
pub use matching::{match_root_multisets, RootMatch};
pub use oracle::durand_kerner;
pub use poly::{Complex, MonicPoly, RootSet};
pub use radicals::{solve_cubic, solve_quadratic};
pub use tolerance::ToleranceConfig;

/// The two supported family degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    /// Three nested quadratics.
    Eight,
    /// Two nested cubics.
    Nine,
}

impl Degree {
    pub fn as_usize(self) -> usize {
        match self {
            Degree::Eight => 8,
            Degree::Nine => 9,
        }
    }
}

impl TryFrom<usize> for Degree {
    type Error = Error;

    fn try_from(n: usize) -> Result<Self> {
        match n {
            8 => Ok(Degree::Eight),
            9 => Ok(Degree::Nine),
            other => Err(Error::invalid(alloc::format!(
                "family degree must be 8 or 9, got {other}"
            ))),
        }
    }
}

impl core::fmt::Display for Degree {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.as_usize())
    }
}
