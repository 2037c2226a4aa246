//! Dense coefficient arithmetic for functional composition.
//!
//! Polynomials here are full ascending coefficient vectors, leading
//! coefficient included, so `[a0, a1, 1]` is `z² + a1 z + a0`.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly::{check_finite_output, ONE, ZERO};
use crate::{Complex, MonicPoly, Result};

/// Cauchy product of two coefficient vectors.
pub fn mul(a: &[Complex], b: &[Complex]) -> Vec<Complex> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `outer(inner(z))`, by Horner's scheme over coefficient vectors.
pub fn compose(outer: &[Complex], inner: &[Complex]) -> Vec<Complex> {
    let mut acc: Vec<Complex> = Vec::new();
    for &c in outer.iter().rev() {
        acc = mul(&acc, inner);
        if acc.is_empty() {
            acc.push(c);
        } else {
            acc[0] += c;
        }
    }
    acc
}

/// Full coefficient vector of the monic polynomial with lower coefficients `lower`.
pub fn monic(lower: &[Complex]) -> Vec<Complex> {
    let mut v = lower.to_vec();
    v.push(ONE);
    v
}

/// Drops the leading coefficient of a composed monic vector and validates it.
pub(crate) fn into_monic_poly(mut full: Vec<Complex>) -> Result<MonicPoly> {
    debug_assert_eq!(full.last().copied(), Some(ONE));
    full.pop();
    check_finite_output(&full, "coefficient")?;
    MonicPoly::new(full)
}
