//! Durand–Kerner (Weierstrass) simultaneous iteration.
//!
//! Independent of the closed-form cascades: it only sees the coefficient
//! vector, so agreement between the two is a meaningful check.

use alloc::vec::Vec;

use crate::poly::{is_finite, ONE};
use crate::{Complex, Error, MonicPoly, Result, RootSet, ToleranceConfig};

const SEED: Complex = Complex::new(0.4, 0.9);

/// All roots of `p`, in canonical order.
///
/// Starts from `r·ω^k` with `ω = 0.4 + 0.9i` and `r = 1 + max|c_m|`, updates
/// in place (Gauss–Seidel order) until the largest step falls below
/// `dk_conv_tol · (1 + max|root|)`, and then requires every root to meet
/// `scaled_residual <= rel_residual`.
pub fn durand_kerner(p: &MonicPoly, cfg: &ToleranceConfig) -> Result<RootSet> {
    cfg.validate()?;
    let n = p.degree();
    let radius = 1.0 + p.max_coeff_norm();
    let mut roots: Vec<Complex> = Vec::with_capacity(n);
    let mut w = ONE;
    for _ in 0..n {
        roots.push(w * radius);
        w *= SEED;
    }

    let mut iterations = 0;
    while iterations < cfg.dk_max_iters {
        iterations += 1;
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let zi = roots[i];
            let mut denom = ONE;
            for (j, &zj) in roots.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates; leave this one for the next sweep
                continue;
            }
            let step = p.eval_unchecked(zi) / denom;
            if !is_finite(step) {
                continue;
            }
            roots[i] = zi - step;
            max_step = max_step.max(step.norm());
        }
        let size = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if max_step < cfg.dk_conv_tol * (1.0 + size) {
            break;
        }
    }

    let residual = p.max_scaled_residual(&roots);
    if residual <= cfg.rel_residual {
        RootSet::new(roots)
    } else {
        Err(Error::NoConvergence {
            iterations,
            residual,
            best: roots,
        })
    }
}
