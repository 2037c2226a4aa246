//! Monic polynomials `z^N + c_{N-1} z^{N-1} + … + c_0` and root multisets.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::{Error, Result};

/// Scalar field for coefficients, parameters and roots.
pub type Complex = num_complex::Complex64;

pub(crate) const ZERO: Complex = Complex::new(0.0, 0.0);
pub(crate) const ONE: Complex = Complex::new(1.0, 0.0);

#[cfg(test)]
pub(crate) fn c(re: f64) -> Complex {
    Complex::new(re, 0.0)
}

pub(crate) fn is_finite(z: Complex) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

pub(crate) fn ensure_finite(values: &[Complex], what: &str) -> Result<()> {
    match values.iter().position(|z| !is_finite(*z)) {
        None => Ok(()),
        Some(i) => Err(Error::invalid(format!("{what}[{i}] is not finite"))),
    }
}

pub(crate) fn check_finite_output(values: &[Complex], what: &str) -> Result<()> {
    match values.iter().position(|z| !is_finite(*z)) {
        None => Ok(()),
        Some(i) => Err(Error::numerical(format!("{what}[{i}] overflowed"))),
    }
}

/// A monic polynomial stored by its non-leading coefficients `c_0..c_{N-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicPoly {
    coeffs: Vec<Complex>,
}

impl MonicPoly {
    /// Builds `z^N + Σ c_m z^m` with `N = coeffs.len() ≥ 1`.
    pub fn new(coeffs: Vec<Complex>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("a monic polynomial needs degree >= 1"));
        }
        ensure_finite(&coeffs, "coefficient")?;
        Ok(MonicPoly { coeffs })
    }

    /// Expands `Π (z − r_k)`.
    pub fn from_roots(roots: &[Complex]) -> Result<Self> {
        ensure_finite(roots, "root")?;
        let mut full = alloc::vec![ONE];
        for &r in roots {
            full.push(ZERO);
            for k in (1..full.len()).rev() {
                full[k] = full[k - 1] - r * full[k];
            }
            full[0] = -r * full[0];
        }
        // `full` now holds ascending coefficients with the leading 1 last.
        full.pop();
        check_finite_output(&full, "coefficient")?;
        Self::new(full)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `c_0..c_{N-1}`.
    pub fn coeffs(&self) -> &[Complex] {
        &self.coeffs
    }

    /// `c_m`, with `coeff(N) == 1`.
    pub fn coeff(&self, m: usize) -> Complex {
        if m == self.coeffs.len() {
            ONE
        } else {
            self.coeffs[m]
        }
    }

    pub fn require_degree(&self, n: usize) -> Result<()> {
        if self.degree() == n {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "expected a degree-{n} polynomial, got degree {}",
                self.degree()
            )))
        }
    }

    /// `max_m |c_m|`.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation. Does not check for overflow; see [`MonicPoly::eval`].
    pub(crate) fn eval_unchecked(&self, z: Complex) -> Complex {
        self.coeffs.iter().rev().fold(ONE, |acc, &c| acc * z + c)
    }

    pub fn eval(&self, z: Complex) -> Result<Complex> {
        if !is_finite(z) {
            return Err(Error::invalid("evaluation point is not finite"));
        }
        let v = self.eval_unchecked(z);
        if is_finite(v) {
            Ok(v)
        } else {
            Err(Error::numerical("polynomial evaluation overflowed"))
        }
    }

    /// Scale used for root acceptance: `(1 + max|c_m|) · max(1, |z|)^N`.
    pub fn residual_scale(&self, z: Complex) -> f64 {
        (1.0 + self.max_coeff_norm()) * libm::pow(z.norm().max(1.0), self.degree() as f64)
    }

    /// `|P(z)|` divided by [`MonicPoly::residual_scale`]. Non-finite values
    /// map to `+inf`.
    pub fn scaled_residual(&self, z: Complex) -> f64 {
        let r = self.eval_unchecked(z).norm() / self.residual_scale(z);
        if r.is_nan() {
            f64::INFINITY
        } else {
            r
        }
    }

    /// Worst scaled residual over `roots`.
    pub fn max_scaled_residual(&self, roots: &[Complex]) -> f64 {
        roots
            .iter()
            .map(|&z| self.scaled_residual(z))
            .fold(0.0, f64::max)
    }

    /// `max_m |c_m − d_m| / (1 + max_m |c_m|)`, the relative distance used by
    /// every round-trip check.
    pub fn relative_distance(&self, other: &MonicPoly) -> f64 {
        if self.degree() != other.degree() {
            return f64::INFINITY;
        }
        let diff = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        diff / (1.0 + self.max_coeff_norm())
    }
}

/// Total order on complex numbers: ascending real part, ties by imaginary part.
pub fn canonical_cmp(a: &Complex, b: &Complex) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Roots counted with multiplicity, held in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSet {
    roots: Vec<Complex>,
}

impl RootSet {
    pub fn new(mut roots: Vec<Complex>) -> Result<Self> {
        check_finite_output(&roots, "root")?;
        for r in roots.iter_mut() {
            // fold -0.0 into +0.0 so the order and serialization do not
            // depend on the sign of zero
            r.re += 0.0;
            r.im += 0.0;
        }
        roots.sort_by(canonical_cmp);
        Ok(RootSet { roots })
    }

    pub fn as_slice(&self) -> &[Complex] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Complex> {
        self.roots.iter()
    }

    pub fn into_vec(self) -> Vec<Complex> {
        self.roots
    }

    /// Smallest pairwise distance (`+inf` for fewer than two roots).
    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, a) in self.roots.iter().enumerate() {
            for b in &self.roots[i + 1..] {
                best = best.min((a - b).norm());
            }
        }
        best
    }
}

impl<'a> IntoIterator for &'a RootSet {
    type Item = &'a Complex;
    type IntoIter = core::slice::Iter<'a, Complex>;

    fn into_iter(self) -> Self::IntoIter {
        self.roots.iter()
    }
}

/// `|target − prediction| / (1 + max|monomial|)`, where `monomials` are the
/// expanded terms of `prediction`.
pub(crate) fn scaled_gap(target: Complex, prediction: Complex, monomials: &[Complex]) -> f64 {
    let scale = 1.0 + monomials.iter().map(|m| m.norm()).fold(0.0, f64::max);
    (target - prediction).norm() / scale
}
