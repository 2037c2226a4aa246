use crate::{Error, Result};

/// Tolerances shared by every solver, detector and oracle in the crate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToleranceConfig {
    /// Bound on scaled residuals, constraint residuals and round-trip errors.
    pub rel_residual: f64,
    /// Maximum distance between paired roots when comparing multisets.
    pub pairing_tol: f64,
    /// Denominators below this (relative) size are treated as zero.
    pub denom_floor: f64,
    pub dk_max_iters: usize,
    pub dk_conv_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            rel_residual: 1e-9,
            pairing_tol: 1e-6,
            denom_floor: 1e-12,
            dk_max_iters: 500,
            dk_conv_tol: 1e-13,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.rel_residual)
            || !positive(self.pairing_tol)
            || !positive(self.denom_floor)
            || !positive(self.dk_conv_tol)
        {
            return Err(Error::invalid(
                "tolerances must be finite and strictly positive",
            ));
        }
        if self.dk_max_iters == 0 {
            return Err(Error::invalid("dk_max_iters must be at least 1"));
        }
        Ok(())
    }

    pub fn with_rel_residual(mut self, tol: f64) -> Self {
        self.rel_residual = tol;
        self
    }
}
