//! Degree-9 family: `P(z) = Cβ(Cα(z))` with `Cα(z) = z³ + α2 z² + α1 z + α0`
//! and `Cβ(y) = y³ + β2 y² + β1 y + β0`.
//!
//! The nine roots are the solutions of `Cα(z) = y_μ` for the three roots
//! `y_μ` of `Cβ`.
//!
//! `α2` and `α1` are fixed by `c_8` and `c_7`; the remaining parameters carry
//! a one-dimensional shift gauge `Cα → Cα + t`, `Cβ(y) → Cβ(y − t)`. On the
//! family, six expressions in the coefficients all equal the gauge invariant
//! `S = 3α0 + β2` (see [`s_expressions`]), which yields five constraints.

use crate::compose::{compose, into_monic_poly, monic};
use crate::poly::{ensure_finite, scaled_gap, ZERO};
use crate::radicals::solve_cubic;
use crate::{Complex, Error, MonicPoly, Result, RootSet, ToleranceConfig};

/// The six parameters `α0, α1, α2, β0, β1, β2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamSet9 {
    pub alpha0: Complex,
    pub alpha1: Complex,
    pub alpha2: Complex,
    pub beta0: Complex,
    pub beta1: Complex,
    pub beta2: Complex,
}

impl ParamSet9 {
    /// From `[α0, α1, α2, β0, β1, β2]`.
    pub fn new(v: [Complex; 6]) -> Result<Self> {
        ensure_finite(&v, "parameter")?;
        Ok(ParamSet9 {
            alpha0: v[0],
            alpha1: v[1],
            alpha2: v[2],
            beta0: v[3],
            beta1: v[4],
            beta2: v[5],
        })
    }

    pub fn to_array(&self) -> [Complex; 6] {
        [
            self.alpha0,
            self.alpha1,
            self.alpha2,
            self.beta0,
            self.beta1,
            self.beta2,
        ]
    }

    pub fn validate(&self) -> Result<()> {
        ensure_finite(&self.to_array(), "parameter")
    }
}

/// `y[mu]` are the roots of `Cβ`; `z[lambda][mu]` solves `Cα(z) = y[mu]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CascadeTrace9 {
    pub y: [Complex; 3],
    pub z: [[Complex; 3]; 3],
}

/// The six right-hand sides that equal `3α0 + β2` on the family, in the
/// order `c6, c5, c4, c2·c1, c3·c1, c3·c2` relations.
#[derive(Clone, Debug, PartialEq)]
pub struct SExpressions {
    /// `None` where the denominator is too small to divide by.
    pub values: [Option<Complex>; 6],
    pub numerators: [Complex; 6],
    /// The first denominator is always 1.
    pub denominators: [Complex; 6],
}

/// Membership verdict for a degree-9 coefficient vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagnosis9 {
    pub in_family: bool,
    pub constraint_residuals: [f64; 5],
    pub roundtrip_error: f64,
    pub recovered: Option<ParamSet9>,
    pub gauge_alpha0: Complex,
}

/// Coefficients of `Cβ ∘ Cα`, by coefficient-array composition.
pub fn forward9(p: &ParamSet9) -> Result<MonicPoly> {
    p.validate()?;
    let ca = monic(&[p.alpha0, p.alpha1, p.alpha2]);
    let cb = monic(&[p.beta0, p.beta1, p.beta2]);
    into_monic_poly(compose(&cb, &ca))
}

/// The closed-form coefficient formulas `c_0..c_8` as published. All nine
/// agree with [`forward9`].
pub fn published_coefficients9(p: &ParamSet9) -> [Complex; 9] {
    let (a0, a1, a2, b0, b1, b2) = (p.alpha0, p.alpha1, p.alpha2, p.beta0, p.beta1, p.beta2);
    let a1s = a1 * a1;
    let a2s = a2 * a2;
    [
        a0 * (b1 + a0 * (a0 + b2)) + b0,
        a0 * a1 * (a0 * 3.0 + b2 * 2.0) + a1 * b1,
        a0 * 3.0 * (a1s + a0 * a2) + b2 * (a1s + a0 * a2 * 2.0) + a2 * b1,
        a0 * 3.0 * (a0 + a1 * a2 * 2.0) + b2 * 2.0 * (a0 + a1 * a2) + a1s * a1 + b1,
        a0 * 3.0 * (a1 * 2.0 + a2s) + a1s * a2 * 3.0 + (a1 * 2.0 + a2s) * b2,
        a1 * 3.0 * (a1 + a2s) + a2 * 2.0 * (a0 * 3.0 + b2),
        a0 * 3.0 + a2 * (a1 * 6.0 + a2s) + b2,
        (a1 + a2s) * 3.0,
        a2 * 3.0,
    ]
}

/// Solves the cubic cascade and returns the nine roots with the trace.
pub fn solve9(p: &ParamSet9, cfg: &ToleranceConfig) -> Result<(RootSet, CascadeTrace9)> {
    cfg.validate()?;
    let poly = forward9(p)?;
    let y = solve_cubic(p.beta2, p.beta1, p.beta0)?;
    let mut z = [[ZERO; 3]; 3];
    for mu in 0..3 {
        let zs = solve_cubic(p.alpha2, p.alpha1, p.alpha0 - y[mu])?;
        for lambda in 0..3 {
            z[lambda][mu] = zs[lambda];
        }
    }
    let roots: alloc::vec::Vec<Complex> = z.iter().flatten().copied().collect();
    let worst = poly.max_scaled_residual(&roots);
    if worst > cfg.rel_residual {
        return Err(Error::numerical(alloc::format!(
            "cascade root residual {worst:e} exceeds {:e}",
            cfg.rel_residual
        )));
    }
    Ok((RootSet::new(roots)?, CascadeTrace9 { y, z }))
}

fn coeffs9(c: &MonicPoly) -> Result<[Complex; 9]> {
    c.require_degree(9)?;
    let mut out = [ZERO; 9];
    out.copy_from_slice(c.coeffs());
    Ok(out)
}

/// `α2 = c8/3` and `α1 = (3c7 − c8²)/9`; these two are gauge invariant.
fn leading_alphas(c: &[Complex; 9]) -> (Complex, Complex) {
    let alpha2 = c[8] / 3.0;
    let alpha1 = (c[7] * 3.0 - c[8] * c[8]) / 9.0;
    (alpha1, alpha2)
}

/// A cross-multiplied relation `target − rest − S·den = 0`.
struct Relation9 {
    numerator: Complex,
    denominator: Complex,
    target: Complex,
    /// Signed monomials of `rest`.
    rest: alloc::vec::Vec<Complex>,
    /// Signed monomials of `den`.
    den_terms: alloc::vec::Vec<Complex>,
}

/// `S` from the `c6` relation (denominator 1) with its signed monomials.
fn s_value(c: &[Complex; 9], alpha1: Complex, alpha2: Complex) -> (Complex, [Complex; 3]) {
    let s = c[6] - alpha2 * (alpha1 * 6.0 + alpha2 * alpha2);
    (s, [c[6], -alpha1 * alpha2 * 6.0, -alpha2 * alpha2 * alpha2])
}

fn relations9(c: &[Complex; 9]) -> [Relation9; 5] {
    let (a1, a2) = leading_alphas(c);
    let a1s = a1 * a1;
    let a2s = a2 * a2;
    let rel =
        |target: Complex, rest: alloc::vec::Vec<Complex>, den_terms: alloc::vec::Vec<Complex>| {
            let numerator = target - rest.iter().sum::<Complex>();
            let denominator = den_terms.iter().sum();
            Relation9 {
                numerator,
                denominator,
                target,
                rest,
                den_terms,
            }
        };
    [
        rel(
            c[5],
            alloc::vec![a1s * 3.0, a1 * a2s * 3.0],
            alloc::vec![a2 * 2.0],
        ),
        rel(
            c[4],
            alloc::vec![a1s * a2 * 3.0],
            alloc::vec![a1 * 2.0, a2s],
        ),
        rel(c[2] * a1, alloc::vec![c[1] * a2], alloc::vec![a1s * a1]),
        rel(
            c[3] * a1,
            alloc::vec![c[1], a1s * a1s],
            alloc::vec![a1s * a2 * 2.0],
        ),
        rel(
            c[3] * a2,
            alloc::vec![c[2], a1s * a1 * a2],
            alloc::vec![a1 * a2s * 2.0, -a1s],
        ),
    ]
}

/// The six expressions equal to `S = 3α0 + β2` on the family, with
/// `α1, α2` taken from `c_7, c_8`.
pub fn s_expressions(c: &MonicPoly, cfg: &ToleranceConfig) -> Result<SExpressions> {
    let cs = coeffs9(c)?;
    let (a1, a2) = leading_alphas(&cs);
    let (s, _) = s_value(&cs, a1, a2);
    let mut numerators = [s; 6];
    let mut denominators = [Complex::new(1.0, 0.0); 6];
    for (k, r) in relations9(&cs).iter().enumerate() {
        numerators[k + 1] = r.numerator;
        denominators[k + 1] = r.denominator;
    }
    let mut values = [None; 6];
    for k in 0..6 {
        let (n, d) = (numerators[k], denominators[k]);
        if d.norm() >= cfg.denom_floor * (1.0 + n.norm()) {
            values[k] = Some(n / d);
        }
    }
    Ok(SExpressions {
        values,
        numerators,
        denominators,
    })
}

/// Scaled residuals of the five relations `expr_k = expr_c6`, each in
/// cross-multiplied form `numerator_k − S·denominator_k` so no division by a
/// possibly vanishing denominator occurs.
pub fn constraints9(c: &MonicPoly) -> Result<[f64; 5]> {
    let cs = coeffs9(c)?;
    let (a1, a2) = leading_alphas(&cs);
    let (s, s_terms) = s_value(&cs, a1, a2);
    let s_max = s_terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    Ok(relations9(&cs).map(|r| {
        let den_max = r.den_terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
        let mut terms = r.rest.clone();
        // largest monomial of S·den is the product of the largest factors
        terms.push(Complex::new(s_max * den_max, 0.0));
        scaled_gap(r.target, r.target - r.numerator + s * r.denominator, &terms)
    }))
}

/// Parameters reproducing `c`, with `α0` pinned to `gauge_alpha0`.
///
/// `α2, α1` come from `c_8, c_7`; then `β2, β1, β0` are solved from the
/// `c_6, c_3, c_0` coefficient formulas, each linear with unit coefficient in
/// its unknown. No data-dependent division occurs.
pub fn recover9(c: &MonicPoly, gauge_alpha0: Complex) -> Result<ParamSet9> {
    let cs = coeffs9(c)?;
    ensure_finite(&[gauge_alpha0], "gauge")?;
    let (a1, a2) = leading_alphas(&cs);
    let a0 = gauge_alpha0;
    let beta2 = cs[6] - a0 * 3.0 - a2 * (a1 * 6.0 + a2 * a2);
    let beta1 =
        cs[3] - a0 * 3.0 * (a0 + a1 * a2 * 2.0) - beta2 * 2.0 * (a0 + a1 * a2) - a1 * a1 * a1;
    let beta0 = cs[0] - a0 * (beta1 + a0 * (a0 + beta2));
    ParamSet9::new([a0, a1, a2, beta0, beta1, beta2])
        .map_err(|_| Error::numerical("recovered parameters overflowed"))
}

/// Residuals of `p` against the published inverse formulas for
/// `α2, α1, α0, β2, β1, β0` (in that order), each `|published − actual| /
/// (1 + |actual|)`.
///
/// The published formulas are mutually recursive, so they can only be
/// checked at a candidate `p`. Entries whose denominator falls below
/// `denom_floor` are `None`. The published `β2` numerator reads
/// `3α0(α0 − 2α1α2)` where the `c_3` formula requires `3α0(α0 + 2α1α2)`, so
/// that entry is nonzero whenever `α0α1α2 ≠ 0`; it vanishes in the `α0 = 0`
/// gauge used by [`recover9`].
pub fn published_inverse_residuals9(
    c: &MonicPoly,
    p: &ParamSet9,
    cfg: &ToleranceConfig,
) -> Result<[Option<f64>; 6]> {
    let cs = coeffs9(c)?;
    let (a0, a1, a2, b0, b1, b2) = (p.alpha0, p.alpha1, p.alpha2, p.beta0, p.beta1, p.beta2);
    let gap =
        |published: Complex, actual: Complex| (published - actual).norm() / (1.0 + actual.norm());
    let guarded = |num: Complex, den: Complex, actual: Complex, extra: Complex| {
        if den.norm() < cfg.denom_floor * (1.0 + num.norm()) {
            None
        } else {
            Some(gap(num / den + extra, actual))
        }
    };
    Ok([
        Some(gap(cs[8] / 3.0, a2)),
        Some(gap((cs[7] * 3.0 - cs[8] * cs[8]) / 9.0, a1)),
        guarded(
            cs[4] - a1 * a1 * a2 * 3.0,
            (a1 * 2.0 + a2 * a2) * 3.0,
            a0,
            -b2 / 3.0,
        ),
        guarded(
            cs[3] - a0 * 3.0 * (a0 - a1 * a2 * 2.0) - a1 * a1 * a1 - b1,
            (a0 + a1 * a2) * 2.0,
            b2,
            ZERO,
        ),
        guarded(cs[1] - a0 * a1 * (a0 * 3.0 + b2 * 2.0), a1, b1, ZERO),
        Some(gap(cs[0] - a0 * (a0 * a0 + a0 * b2 + b1), b0)),
    ])
}

/// Tests membership with the default gauge `α0 = 0`.
pub fn detect9(c: &MonicPoly, cfg: &ToleranceConfig) -> Result<Diagnosis9> {
    detect9_with_gauge(c, cfg, ZERO)
}

/// Membership: all five constraint residuals and the `recover9 → forward9`
/// round-trip error must be within `cfg.rel_residual`.
pub fn detect9_with_gauge(
    c: &MonicPoly,
    cfg: &ToleranceConfig,
    gauge_alpha0: Complex,
) -> Result<Diagnosis9> {
    cfg.validate()?;
    let constraint_residuals = constraints9(c)?;
    let candidate = recover9(c, gauge_alpha0)?;
    let roundtrip_error = match forward9(&candidate) {
        Ok(back) => c.relative_distance(&back),
        Err(_) => f64::INFINITY,
    };
    let in_family = constraint_residuals.iter().all(|&r| r <= cfg.rel_residual)
        && roundtrip_error <= cfg.rel_residual;
    Ok(Diagnosis9 {
        in_family,
        constraint_residuals,
        roundtrip_error,
        recovered: in_family.then_some(candidate),
        gauge_alpha0,
    })
}

/// `(α0 + t, α1, α2, coefficients of Cβ(y − t))`: the same polynomial.
pub fn shift_gauge9(p: &ParamSet9, t: Complex) -> Result<ParamSet9> {
    let cb = monic(&[p.beta0, p.beta1, p.beta2]);
    let shifted = compose(&cb, &[-t, Complex::new(1.0, 0.0)]);
    ParamSet9::new([
        p.alpha0 + t,
        p.alpha1,
        p.alpha2,
        shifted[0],
        shifted[1],
        shifted[2],
    ])
}
