//! Degree-8 family: `P(z) = Qγ(Qβ(Qα(z)))` with
//! `Qα(z) = z² + α1 z + α0`, `Qβ(y) = y² + β1 y + β0`, `Qγ(x) = x² + γ1 x + γ0`.
//!
//! The roots come from three levels of quadratics: the two roots `x_ν` of
//! `Qγ`, the four roots `y_μν` of `Qβ(y) = x_ν`, and the eight roots `z_λμν`
//! of `Qα(z) = y_μν`.
//!
//! The parameters are only determined up to a two-dimensional gauge:
//! shifting `Qα` by `s` and `Qβ` by `t` (with matching substitutions in the
//! outer factors) leaves `P` unchanged. [`recover8`] pins the gauge through
//! `(α0, β0)`.

use crate::compose::{compose, into_monic_poly, monic};
use crate::poly::{ensure_finite, scaled_gap, ZERO};
use crate::radicals::solve_quadratic;
use crate::{Complex, Error, MonicPoly, Result, RootSet, ToleranceConfig};

/// The six parameters `α0, α1, β0, β1, γ0, γ1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParamSet8 {
    pub alpha0: Complex,
    pub alpha1: Complex,
    pub beta0: Complex,
    pub beta1: Complex,
    pub gamma0: Complex,
    pub gamma1: Complex,
}

impl ParamSet8 {
    /// From `[α0, α1, β0, β1, γ0, γ1]`.
    pub fn new(v: [Complex; 6]) -> Result<Self> {
        ensure_finite(&v, "parameter")?;
        Ok(ParamSet8 {
            alpha0: v[0],
            alpha1: v[1],
            beta0: v[2],
            beta1: v[3],
            gamma0: v[4],
            gamma1: v[5],
        })
    }

    pub fn to_array(&self) -> [Complex; 6] {
        [
            self.alpha0,
            self.alpha1,
            self.beta0,
            self.beta1,
            self.gamma0,
            self.gamma1,
        ]
    }

    pub fn validate(&self) -> Result<()> {
        ensure_finite(&self.to_array(), "parameter")
    }
}

/// Intermediate values of the cascade.
///
/// `y[mu][nu]` solves `y² + β1 y + β0 = x[nu]`, and `z[lambda][mu][nu]`
/// solves `z² + α1 z + α0 = y[mu][nu]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CascadeTrace8 {
    pub x: [Complex; 2],
    pub y: [[Complex; 2]; 2],
    pub z: [[[Complex; 2]; 2]; 2],
}

/// Membership verdict for a degree-8 coefficient vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagnosis8 {
    pub in_family: bool,
    /// Scaled residuals of the four constraint relations.
    pub constraint_residuals: [f64; 4],
    /// Relative distance between the input and `forward8(recover8(input))`.
    pub roundtrip_error: f64,
    pub recovered: Option<ParamSet8>,
    /// `(α0, β0)` used for recovery.
    pub gauge: (Complex, Complex),
}

/// Coefficients of `Qγ ∘ Qβ ∘ Qα`, by coefficient-array composition.
pub fn forward8(p: &ParamSet8) -> Result<MonicPoly> {
    p.validate()?;
    let qa = monic(&[p.alpha0, p.alpha1]);
    let qb = monic(&[p.beta0, p.beta1]);
    let qg = monic(&[p.gamma0, p.gamma1]);
    into_monic_poly(compose(&compose(&qg, &qb), &qa))
}

/// The closed-form coefficient formulas `c_0..c_7` as published.
///
/// `c_1..c_7` agree with [`forward8`]. The published `c_0` carries the term
/// `2α0²β1` inside its `α0[…]` bracket, where the expansion has `2α0β1`, so
/// it differs from the true constant term by `2α0³β1(α0 − 1)`.
pub fn published_coefficients8(p: &ParamSet8) -> [Complex; 8] {
    let (a0, a1, b0, b1, g0, g1) = (p.alpha0, p.alpha1, p.beta0, p.beta1, p.gamma0, p.gamma1);
    let a1s = a1 * a1;
    let c7 = a1 * 4.0;
    let c6 = a0 * 4.0 + a1s * 6.0 + b1 * 2.0;
    let c5 = a0 * a1 * 12.0 + a1s * a1 * 4.0 + a1 * b1 * 6.0;
    let c4 = a0 * 6.0 * (a0 + a1s * 2.0 + b1) + a1s * (a1s + b1 * 6.0) + b0 * 2.0 + b1 * b1 + g1;
    let c3 = a0 * a1 * 4.0 * (a0 * 3.0 + a1s + b1 * 3.0)
        + a1 * 2.0 * (b0 * 2.0 + a1s * b1 + b1 * b1 + g1);
    let c2 =
        a0 * 2.0 * (a0 * a0 * 2.0 + a0 * a1s * 3.0 + b0 * 2.0 + (a0 + a1s) * 3.0 * b1 + b1 * b1)
            + a1s * b0 * 2.0
            + (b0 * 2.0 + a1s * b1) * b1
            + (a0 * 2.0 + a1s + b1) * g1;
    let c1 = a1
        * (a0 * 2.0 * (a0 * a0 * 2.0 + b0 * 2.0 + (a0 * 3.0 + b1) * b1)
            + b0 * b1 * 2.0
            + (a0 * 2.0 + b1) * g1);
    let c0 = a0
        * (a0 * a0 * a0
            + a0 * (b0 * 2.0 + a0 * a0 * b1 * 2.0 + b1 * b1)
            + b0 * b1 * 2.0
            + (a0 + b1) * g1)
        + b0 * (b0 + g1)
        + g0;
    [c0, c1, c2, c3, c4, c5, c6, c7]
}

/// Solves the cascade and returns the eight roots with the trace.
///
/// Every root is checked against `forward8(p)` with the scaled residual
/// bound `cfg.rel_residual`.
pub fn solve8(p: &ParamSet8, cfg: &ToleranceConfig) -> Result<(RootSet, CascadeTrace8)> {
    cfg.validate()?;
    let poly = forward8(p)?;
    let x = solve_quadratic(p.gamma1, p.gamma0)?;
    let mut y = [[ZERO; 2]; 2];
    let mut z = [[[ZERO; 2]; 2]; 2];
    for nu in 0..2 {
        let ys = solve_quadratic(p.beta1, p.beta0 - x[nu])?;
        for mu in 0..2 {
            y[mu][nu] = ys[mu];
            let zs = solve_quadratic(p.alpha1, p.alpha0 - ys[mu])?;
            for lambda in 0..2 {
                z[lambda][mu][nu] = zs[lambda];
            }
        }
    }
    let roots: alloc::vec::Vec<Complex> = z.iter().flatten().flatten().copied().collect();
    let worst = poly.max_scaled_residual(&roots);
    if worst > cfg.rel_residual {
        return Err(Error::numerical(alloc::format!(
            "cascade root residual {worst:e} exceeds {:e}",
            cfg.rel_residual
        )));
    }
    Ok((RootSet::new(roots)?, CascadeTrace8 { x, y, z }))
}

fn coeffs8(c: &MonicPoly) -> Result<[Complex; 8]> {
    c.require_degree(8)?;
    let mut out = [ZERO; 8];
    out.copy_from_slice(c.coeffs());
    Ok(out)
}

/// One constraint relation `target = prediction`, with the expanded signed
/// monomials of `prediction`.
struct Relation {
    target: Complex,
    prediction: Complex,
    terms: alloc::vec::Vec<Complex>,
}

fn relations8(c: &MonicPoly) -> Result<[Relation; 4]> {
    let [_, c1, c2, c3, c4, c5, c6, c7] = coeffs8(c)?;
    let c7_2 = c7 * c7;
    let c7_3 = c7_2 * c7;
    let c7_4 = c7_2 * c7_2;
    let c6_2 = c6 * c6;
    Ok([
        Relation {
            target: c5,
            prediction: c7 * (c6 * 24.0 - c7_2 * 7.0) / 32.0,
            terms: alloc::vec![c6 * c7 * 0.75, -c7_3 * (7.0 / 32.0)],
        },
        Relation {
            target: c3,
            prediction: c7 * (c4 * 128.0 - c6 * c7_2 * 20.0 + c7_4 * 7.0) / 256.0,
            terms: alloc::vec![
                c4 * c7 * 0.5,
                -c6 * c7_3 * (20.0 / 256.0),
                c7_4 * c7 * (7.0 / 256.0)
            ],
        },
        Relation {
            target: c2,
            prediction: (c4 * 512.0 * (c6 * 4.0 - c7_2) - (c6 * 8.0 - c7_2 * 3.0) * 64.0 * c6_2
                + (c6 * 16.0 - c7_2 * 7.0) * c7_4)
                / 4096.0,
            terms: alloc::vec![
                c4 * c6 * 0.5,
                -c4 * c7_2 * 0.125,
                -c6_2 * c6 * 0.125,
                c6_2 * c7_2 * (192.0 / 4096.0),
                c6 * c7_4 * (16.0 / 4096.0),
                -c7_4 * c7_2 * (7.0 / 4096.0),
            ],
        },
        Relation {
            target: c1,
            prediction: c7 * (c6 * 8.0 - c7_2 * 3.0) * (c4 * 32.0 - c6_2 * 8.0 + c7_4) / 2048.0,
            terms: alloc::vec![
                c4 * c6 * c7 * (256.0 / 2048.0),
                -c6_2 * c6 * c7 * (64.0 / 2048.0),
                c6 * c7_4 * c7 * (8.0 / 2048.0),
                -c4 * c7_3 * (96.0 / 2048.0),
                c6_2 * c7_3 * (24.0 / 2048.0),
                -c7_4 * c7_3 * (3.0 / 2048.0),
            ],
        },
    ])
}

/// Scaled residuals of the four relations that `c_5, c_3, c_2, c_1` satisfy
/// on the family, each evaluated in its published factored form and scaled
/// by `1 + max` of the expanded right-hand-side monomials.
pub fn constraints8(c: &MonicPoly) -> Result<[f64; 4]> {
    Ok(relations8(c)?.map(|r| scaled_gap(r.target, r.prediction, &r.terms)))
}

/// Parameters reproducing `c`, with the free pair `(α0, β0)` pinned to the
/// given gauge. Exact whenever `c` lies on the family.
pub fn recover8(c: &MonicPoly, gauge_alpha0: Complex, gauge_beta0: Complex) -> Result<ParamSet8> {
    let [c0, _, _, _, c4, _, c6, c7] = coeffs8(c)?;
    ensure_finite(&[gauge_alpha0, gauge_beta0], "gauge")?;
    let a0 = gauge_alpha0;
    let b0 = gauge_beta0;
    let c7_2 = c7 * c7;
    let k = c6 * 8.0 - c7_2 * 3.0;
    let shift = (a0 * a0 - b0) * 16.0;

    let alpha1 = c7 / 4.0;
    let beta1 = -(a0 * 32.0 - c6 * 8.0 + c7_2 * 3.0) / 16.0;
    let gamma1 = -a0 * c6
        + (a0 * a0 - b0) * 2.0
        + c4
        + (-(c6 * c6) * 8.0 + a0 * c7_2 * 12.0 + c7_2 * c7_2) / 32.0;
    let gamma0 = c0
        - (a0 * k - shift) * (c7_2 * c7_2 - c6 * c6 * 8.0 + c4 * 32.0 - a0 * k * 2.0 + shift * 2.0)
            / 512.0;
    ParamSet8::new([a0, alpha1, b0, beta1, gamma0, gamma1])
        .map_err(|_| Error::numerical("recovered parameters overflowed"))
}

/// Tests membership with the default gauge `(0, 0)`.
pub fn detect8(c: &MonicPoly, cfg: &ToleranceConfig) -> Result<Diagnosis8> {
    detect8_with_gauge(c, cfg, (ZERO, ZERO))
}

/// Membership: every constraint residual and the `recover8 → forward8`
/// round-trip error must be within `cfg.rel_residual`.
pub fn detect8_with_gauge(
    c: &MonicPoly,
    cfg: &ToleranceConfig,
    gauge: (Complex, Complex),
) -> Result<Diagnosis8> {
    cfg.validate()?;
    let constraint_residuals = constraints8(c)?;
    let candidate = recover8(c, gauge.0, gauge.1)?;
    let roundtrip_error = match forward8(&candidate) {
        Ok(back) => c.relative_distance(&back),
        Err(_) => f64::INFINITY,
    };
    let in_family = constraint_residuals.iter().all(|&r| r <= cfg.rel_residual)
        && roundtrip_error <= cfg.rel_residual;
    Ok(Diagnosis8 {
        in_family,
        constraint_residuals,
        roundtrip_error,
        recovered: in_family.then_some(candidate),
        gauge,
    })
}

/// Moves `p` along its gauge orbit: `Qα → Qα + s`, `Qβ → Qβ(· − s) + t`,
/// `Qγ → Qγ(· − t)`. The composed polynomial is unchanged.
pub fn shift_gauge8(p: &ParamSet8, s: Complex, t: Complex) -> Result<ParamSet8> {
    let beta1 = p.beta1 - s * 2.0;
    let beta0 = s * s - p.beta1 * s + p.beta0 + t;
    let gamma1 = p.gamma1 - t * 2.0;
    let gamma0 = t * t - p.gamma1 * t + p.gamma0;
    ParamSet8::new([p.alpha0 + s, p.alpha1, beta0, beta1, gamma0, gamma1])
}
