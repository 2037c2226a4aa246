//! Closed-form cascade vs Durand–Kerner timing.

use std::time::{Duration, Instant};

use nestsolve_core::corpus::{instance, GenSpec, Instance};
use nestsolve_core::{durand_kerner, match_root_multisets, Error, ToleranceConfig};
use rayon::prelude::*;
use serde::Serialize;

/// Instances whose cascade roots are closer than this are reported as
/// clustered and excluded from the mismatch count.
pub const MIN_SEPARATION: f64 = 1e-3;

const WARMUP: usize = 32;

#[derive(Debug, thiserror::Error)]
pub enum BenchError {
    #[error(transparent)]
    Spec(Error),
    #[error("instance {index}: {source}")]
    Instance { index: u64, source: Error },
}

impl BenchError {
    pub fn core_error(&self) -> &Error {
        match self {
            BenchError::Spec(e) => e,
            BenchError::Instance { source, .. } => source,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    pub degree: usize,
    pub count: usize,
    pub closed_form_total_ns: u64,
    pub oracle_total_ns: u64,
    /// `oracle_total_ns / closed_form_total_ns`.
    pub speedup_ratio: f64,
    pub max_residual_closed_form: f64,
    pub max_residual_oracle: f64,
    /// Well-separated instances whose root multisets failed to pair.
    pub mismatches: usize,
    /// Instances with minimal root separation below [`MIN_SEPARATION`].
    pub clustered: usize,
}

/// Generates the corpus in parallel; identical to the serial
/// [`nestsolve_core::corpus::gen_instances`].
pub fn par_gen_instances(spec: &GenSpec) -> Result<Vec<Instance>, Error> {
    spec.validate()?;
    (0..spec.count as u64)
        .into_par_iter()
        .map(|k| instance(spec, k))
        .collect()
}

fn nanos(d: Duration) -> u64 {
    u64::try_from(d.as_nanos()).unwrap_or(u64::MAX)
}

/// Times the cascade and the oracle on every instance of `spec`, checking
/// that both root sets meet the residual bound and agree with each other.
///
/// JSON serialization and generation are outside the timed region. A short
/// untimed warm-up pass runs first.
pub fn bench_compare(spec: &GenSpec, cfg: &ToleranceConfig) -> Result<BenchReport, BenchError> {
    if spec.perturb.is_some() {
        return Err(BenchError::Spec(Error::InvalidInput(
            "bench needs an unperturbed corpus".into(),
        )));
    }
    cfg.validate().map_err(BenchError::Spec)?;
    let corpus = par_gen_instances(spec).map_err(BenchError::Spec)?;
    let fail = |index: u64| move |source: Error| BenchError::Instance { index, source };

    for inst in corpus.iter().take(WARMUP) {
        let _ = inst.params.solve(cfg);
        let _ = durand_kerner(&inst.poly, cfg);
    }

    let mut closed = Duration::ZERO;
    let mut oracle = Duration::ZERO;
    let mut report = BenchReport {
        degree: spec.degree.as_usize(),
        count: spec.count,
        closed_form_total_ns: 0,
        oracle_total_ns: 0,
        speedup_ratio: 0.0,
        max_residual_closed_form: 0.0,
        max_residual_oracle: 0.0,
        mismatches: 0,
        clustered: 0,
    };
    for inst in &corpus {
        let start = Instant::now();
        let solved = inst.params.solve(cfg);
        closed += start.elapsed();
        let (cascade, _) = solved.map_err(fail(inst.index))?;

        let start = Instant::now();
        let iterated = durand_kerner(&inst.poly, cfg);
        oracle += start.elapsed();
        let iterated = iterated.map_err(fail(inst.index))?;

        report.max_residual_closed_form = report
            .max_residual_closed_form
            .max(inst.poly.max_scaled_residual(cascade.as_slice()));
        report.max_residual_oracle = report
            .max_residual_oracle
            .max(inst.poly.max_scaled_residual(iterated.as_slice()));

        if cascade.min_separation() < MIN_SEPARATION {
            report.clustered += 1;
        } else if !match_root_multisets(&cascade, &iterated, cfg.pairing_tol)
            .map_err(fail(inst.index))?
            .is_paired()
        {
            report.mismatches += 1;
        }
    }
    report.closed_form_total_ns = nanos(closed);
    report.oracle_total_ns = nanos(oracle);
    report.speedup_ratio =
        report.oracle_total_ns as f64 / report.closed_form_total_ns.max(1) as f64;
    Ok(report)
}
