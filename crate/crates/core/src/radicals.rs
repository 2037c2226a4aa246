//! Closed-form quadratic and cubic solvers over the complex numbers.

use crate::poly::{check_finite_output, ensure_finite, ZERO};
use crate::{Complex, Result};

/// Below this relative size the Cardano radical is treated as zero.
const CARDANO_FLOOR: f64 = 1e-12;

/// Primitive cube root of unity `−1/2 + i√3/2`.
const OMEGA: Complex = Complex::new(-0.5, 0.866_025_403_784_438_6);
const OMEGA_BAR: Complex = Complex::new(-0.5, -0.866_025_403_784_438_6);

/// Both roots of `x² + a1 x + a0 = 0`, counted with multiplicity.
///
/// The larger-magnitude root is formed with the radical whose sign matches
/// `a1`, so no subtraction of nearly equal quantities occurs; the other root
/// comes from the product `a0 / x_big`.
pub fn solve_quadratic(a1: Complex, a0: Complex) -> Result<[Complex; 2]> {
    ensure_finite(&[a1, a0], "quadratic coefficient")?;
    let disc = (a1 * a1 - a0 * 4.0).sqrt();
    let d = if (a1.conj() * disc).re >= 0.0 {
        disc
    } else {
        -disc
    };
    let big = -(a1 + d) * 0.5;
    let small = if big == ZERO { ZERO } else { a0 / big };
    let roots = [big, small];
    check_finite_output(&roots, "quadratic root")?;
    Ok(roots)
}

/// Principal cube root.
fn principal_cbrt(w: Complex) -> Complex {
    let r = libm::cbrt(w.norm());
    let theta = libm::atan2(w.im, w.re) / 3.0;
    Complex::new(r * libm::cos(theta), r * libm::sin(theta))
}

/// All three roots of `x³ + a2 x² + a1 x + a0 = 0`, counted with multiplicity.
///
/// Cardano on the depressed cubic `t³ + p t + q` with `x = t − a2/3`. The
/// larger of the two Cardano radicands is used, and the three roots are the
/// principal cube root rotated by the cube roots of unity.
///
/// When `a2` dominates, `t − a2/3` cancels for the small roots. The two
/// smaller roots are then also formed by deflating the dominant one through
/// Vieta (`x2 x3 = −a0/x1`, `x2 + x3 = (a1 − x2 x3)/x1`), and whichever triple
/// has the smaller worst residual is returned.
pub fn solve_cubic(a2: Complex, a1: Complex, a0: Complex) -> Result<[Complex; 3]> {
    ensure_finite(&[a2, a1, a0], "cubic coefficient")?;
    let cardano = cardano(a2, a1, a0);
    check_finite_output(&cardano, "cubic root")?;

    let worst = |r: &[Complex; 3]| {
        r.iter()
            .map(|&x| cubic_residual(a2, a1, a0, x))
            .fold(0.0, f64::max)
    };
    let dominant = cardano
        .iter()
        .copied()
        .fold(ZERO, |m, x| if x.norm() > m.norm() { x } else { m });
    if dominant == ZERO {
        return Ok(cardano);
    }
    let product = -a0 / dominant;
    let sum = (a1 - product) / dominant;
    let [x2, x3] = solve_quadratic(-sum, product)?;
    let deflated = [dominant, x2, x3];
    if worst(&deflated) < worst(&cardano) {
        Ok(deflated)
    } else {
        Ok(cardano)
    }
}

fn cardano(a2: Complex, a1: Complex, a0: Complex) -> [Complex; 3] {
    let shift = a2 / 3.0;
    let p = a1 - a2 * shift;
    let q = a0 - a1 * shift + shift * shift * shift * 2.0;

    let half_q = q * 0.5;
    let third_p = p / 3.0;
    let s = (half_q * half_q + third_p * third_p * third_p).sqrt();
    let w_plus = -half_q + s;
    let w_minus = -half_q - s;
    let w = if w_plus.norm() >= w_minus.norm() {
        w_plus
    } else {
        w_minus
    };
    let u = principal_cbrt(w);

    let size = 1.0f64.max(libm::sqrt(p.norm())).max(libm::cbrt(q.norm()));
    if u.norm() <= CARDANO_FLOOR * size {
        return [-shift; 3];
    }
    let v = -third_p / u;
    [
        u + v - shift,
        OMEGA * u + OMEGA_BAR * v - shift,
        OMEGA_BAR * u + OMEGA * v - shift,
    ]
}

/// Residual scale for a cubic root: `max(1, |a2|, |a1|, |a0|) · max(1, |r|)³`.
pub fn cubic_residual(a2: Complex, a1: Complex, a0: Complex, r: Complex) -> f64 {
    let value = ((r + a2) * r + a1) * r + a0;
    let scale =
        1.0f64.max(a2.norm()).max(a1.norm()).max(a0.norm()) * libm::pow(r.norm().max(1.0), 3.0);
    value.norm() / scale
}
