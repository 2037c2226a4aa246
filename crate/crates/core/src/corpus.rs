//! Reproducible instance generation.
//!
//! Instance `k` of a corpus draws its randomness from a ChaCha8 stream keyed
//! by `(seed, k)`, so any subset of instances can be generated independently
//! (and in parallel) with the same result as a serial run.

use alloc::vec::Vec;
use core::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::deg8::{self, CascadeTrace8, ParamSet8};
use crate::deg9::{self, CascadeTrace9, ParamSet9};
use crate::{Complex, Degree, Error, MonicPoly, Result, RootSet, ToleranceConfig};

/// Displacement of one coefficient, for generating off-family instances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Perturbation {
    pub index: usize,
    pub magnitude: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenSpec {
    pub degree: Degree,
    pub count: usize,
    pub seed: u64,
    /// Parameters are drawn uniformly from the complex disk of this radius
    /// (or the real interval `[-radius, radius]` when `real_only`).
    pub radius: f64,
    pub real_only: bool,
    pub perturb: Option<Perturbation>,
}

impl GenSpec {
    pub fn new(degree: Degree, count: usize, seed: u64) -> Self {
        GenSpec {
            degree,
            count,
            seed,
            radius: 2.0,
            real_only: false,
            perturb: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::invalid("count must be at least 1"));
        }
        if !(self.radius.is_finite() && self.radius > 0.0) {
            return Err(Error::invalid("radius must be finite and positive"));
        }
        if let Some(p) = self.perturb {
            if p.index >= self.degree.as_usize() {
                return Err(Error::invalid(alloc::format!(
                    "perturbation index {} out of range for degree {}",
                    p.index,
                    self.degree
                )));
            }
            if !(p.magnitude.is_finite() && p.magnitude >= 0.0) {
                return Err(Error::invalid(
                    "perturbation magnitude must be finite and non-negative",
                ));
            }
        }
        Ok(())
    }
}

/// A parameter set of either family.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Params {
    Deg8(ParamSet8),
    Deg9(ParamSet9),
}

/// Cascade trace of either family.
#[derive(Clone, Debug, PartialEq)]
pub enum Trace {
    Deg8(CascadeTrace8),
    Deg9(CascadeTrace9),
}

impl Params {
    /// Parameters in declaration order (`α0, α1, β0, β1, γ0, γ1` or
    /// `α0, α1, α2, β0, β1, β2`).
    pub fn from_array(degree: Degree, v: [Complex; 6]) -> Result<Self> {
        Ok(match degree {
            Degree::Eight => Params::Deg8(ParamSet8::new(v)?),
            Degree::Nine => Params::Deg9(ParamSet9::new(v)?),
        })
    }

    pub fn degree(&self) -> Degree {
        match self {
            Params::Deg8(_) => Degree::Eight,
            Params::Deg9(_) => Degree::Nine,
        }
    }

    pub fn to_array(&self) -> [Complex; 6] {
        match self {
            Params::Deg8(p) => p.to_array(),
            Params::Deg9(p) => p.to_array(),
        }
    }

    pub fn forward(&self) -> Result<MonicPoly> {
        match self {
            Params::Deg8(p) => deg8::forward8(p),
            Params::Deg9(p) => deg9::forward9(p),
        }
    }

    pub fn solve(&self, cfg: &ToleranceConfig) -> Result<(RootSet, Trace)> {
        match self {
            Params::Deg8(p) => deg8::solve8(p, cfg).map(|(r, t)| (r, Trace::Deg8(t))),
            Params::Deg9(p) => deg9::solve9(p, cfg).map(|(r, t)| (r, Trace::Deg9(t))),
        }
    }
}

/// Membership test for either family, with the default gauge.
pub fn in_family(poly: &MonicPoly, cfg: &ToleranceConfig) -> Result<bool> {
    match Degree::try_from(poly.degree())? {
        Degree::Eight => Ok(deg8::detect8(poly, cfg)?.in_family),
        Degree::Nine => Ok(deg9::detect9(poly, cfg)?.in_family),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub index: u64,
    pub params: Params,
    /// `forward(params)`, displaced by the spec's perturbation if any.
    pub poly: MonicPoly,
    /// When set, `params` no longer generates `poly`.
    pub perturbed: bool,
}

fn draw(rng: &mut ChaCha8Rng, radius: f64, real_only: bool) -> Complex {
    if real_only {
        Complex::new(radius * (2.0 * rng.gen::<f64>() - 1.0), 0.0)
    } else {
        let r = radius * libm::sqrt(rng.gen::<f64>());
        let theta = TAU * rng.gen::<f64>();
        Complex::new(r * libm::cos(theta), r * libm::sin(theta))
    }
}

/// Instance `index` of the corpus described by `spec`.
pub fn instance(spec: &GenSpec, index: u64) -> Result<Instance> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(index);
    let mut v = [Complex::new(0.0, 0.0); 6];
    for x in v.iter_mut() {
        *x = draw(&mut rng, spec.radius, spec.real_only);
    }
    let params = Params::from_array(spec.degree, v)?;
    let mut poly = params.forward()?;
    if let Some(p) = spec.perturb {
        let unit = if spec.real_only {
            Complex::new(if rng.gen::<bool>() { 1.0 } else { -1.0 }, 0.0)
        } else {
            let theta = TAU * rng.gen::<f64>();
            Complex::new(libm::cos(theta), libm::sin(theta))
        };
        let mut cs = poly.coeffs().to_vec();
        cs[p.index] += unit * p.magnitude;
        poly = MonicPoly::new(cs)?;
    }
    Ok(Instance {
        index,
        params,
        poly,
        perturbed: spec.perturb.is_some(),
    })
}

/// All `spec.count` instances, in index order.
pub fn gen_instances(spec: &GenSpec) -> Result<Vec<Instance>> {
    spec.validate()?;
    (0..spec.count as u64).map(|k| instance(spec, k)).collect()
}
