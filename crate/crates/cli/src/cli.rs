//! Argument parsing and subcommand dispatch.

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use nestsolve_core::corpus::{GenSpec, Params, Perturbation};
use nestsolve_core::{
    deg8, deg9, durand_kerner, Complex, Degree, Error, MonicPoly, ToleranceConfig,
};
use serde::Serialize;

use crate::bench::{bench_compare, par_gen_instances};
use crate::json::{
    corpus_jsonl, roots_json, to_json, JsonDiagnosis, JsonParams, JsonPolynomial, JsonResult,
    JsonTrace, JsonVerifyInput,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_IN_FAMILY: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(
    name = "nestsolve",
    version,
    about = "Build, detect, and solve composed degree-8 and degree-9 polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parameters JSON in, polynomial JSON out.
    Forward(IoArgs),
    /// Parameters or an in-family polynomial in, roots and cascade trace out.
    Solve(SolveArgs),
    /// Polynomial in, membership diagnosis out (exit 1 when not in the family).
    Detect(DetectArgs),
    /// Polynomial plus roots in, worst scaled residual out.
    Verify(IoArgs),
    /// Emit a JSON-lines corpus.
    Gen(GenArgs),
    /// Time the cascade against Durand–Kerner over a generated corpus.
    Bench(GenArgs),
}

#[derive(Args, Debug)]
struct IoArgs {
    /// Family degree; must match the input when both are given.
    #[arg(long)]
    degree: Option<usize>,
    /// Input file, or `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    input: String,
    /// Output file, or `-` for stdout.
    #[arg(long, default_value = "-")]
    out: String,
    /// Residual tolerance (default 1e-9).
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct GaugeArgs {
    /// Gauge value for α0, as `RE,IM`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    gauge_alpha0: Option<Complex>,
    /// Gauge value for β0 (degree 8 only), as `RE,IM`.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    gauge_beta0: Option<Complex>,
}

#[derive(Args, Debug)]
struct DetectArgs {
    #[command(flatten)]
    io: IoArgs,
    #[command(flatten)]
    gauge: GaugeArgs,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    io: IoArgs,
    #[command(flatten)]
    gauge: GaugeArgs,
    /// Use Durand–Kerner on the polynomial instead of the cascade.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    degree: usize,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 2.0)]
    radius: f64,
    /// Displace coefficient IDX by a random value of magnitude MAG, as `IDX,MAG`.
    #[arg(long, value_parser = parse_perturb)]
    perturb: Option<Perturbation>,
    #[arg(long)]
    real_only: bool,
    #[arg(long, default_value = "-")]
    out: String,
    #[arg(long)]
    tol: Option<f64>,
}

fn parse_complex(s: &str) -> Result<Complex, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected RE,IM, got {s:?}"))?;
    let re: f64 = re.trim().parse().map_err(|e| format!("{e}"))?;
    let im: f64 = im.trim().parse().map_err(|e| format!("{e}"))?;
    if re.is_finite() && im.is_finite() {
        Ok(Complex::new(re, im))
    } else {
        Err("gauge values must be finite".into())
    }
}

fn parse_perturb(s: &str) -> Result<Perturbation, String> {
    let (idx, mag) = s
        .split_once(',')
        .ok_or_else(|| format!("expected IDX,MAG, got {s:?}"))?;
    Ok(Perturbation {
        index: idx.trim().parse().map_err(|e| format!("{e}"))?,
        magnitude: mag.trim().parse().map_err(|e| format!("{e}"))?,
    })
}

/// A failure that ends the command with a message on stderr and nothing on stdout.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_invalid_input() {
            EXIT_INVALID
        } else {
            EXIT_NUMERICAL
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INVALID,
        message: message.into(),
    }
}

/// Successful command output: a JSON document (or JSON lines) and an exit code.
struct Emit {
    code: i32,
    body: String,
}

fn json_line<T: Serialize>(code: i32, value: &T) -> Emit {
    let mut body = to_json(value);
    body.push('\n');
    Emit { code, body }
}

/// Runs the CLI on `args` (program name first), reading `-` inputs from `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INVALID,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                // --help / --version
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let out_path = match &cli.command {
        Command::Forward(io) | Command::Verify(io) => io.out.clone(),
        Command::Solve(a) => a.io.out.clone(),
        Command::Detect(a) => a.io.out.clone(),
        Command::Gen(g) | Command::Bench(g) => g.out.clone(),
    };
    let result = dispatch(cli.command, stdin).and_then(|emit| {
        if out_path == "-" {
            Ok((emit.code, emit.body))
        } else {
            std::fs::write(&out_path, &emit.body)
                .map(|_| (emit.code, String::new()))
                .map_err(|e| invalid(format!("cannot write {out_path}: {e}")))
        }
    });
    match result {
        Ok((code, stdout)) => Outcome {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("error: {}\n", f.message),
        },
    }
}

fn dispatch(command: Command, stdin: &mut dyn Read) -> Result<Emit, Failure> {
    match command {
        Command::Forward(io) => forward(&io, stdin),
        Command::Solve(a) => solve(&a, stdin),
        Command::Detect(a) => detect(&a, stdin),
        Command::Verify(io) => verify(&io, stdin),
        Command::Gen(g) => gen(&g),
        Command::Bench(g) => bench(&g),
    }
}

fn tolerances(tol: Option<f64>) -> Result<ToleranceConfig, Failure> {
    let cfg = match tol {
        Some(t) => ToleranceConfig::default().with_rel_residual(t),
        None => ToleranceConfig::default(),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<serde_json::Value, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin
            .read_to_string(&mut text)
            .map_err(|e| invalid(format!("cannot read stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path)
            .map_err(|e| invalid(format!("cannot read {path}: {e}")))?;
    }
    serde_json::from_str(&text).map_err(|e| invalid(format!("malformed JSON: {e}")))
}

fn decode<T: serde::de::DeserializeOwned>(
    value: serde_json::Value,
    what: &str,
) -> Result<T, Failure> {
    serde_json::from_value(value).map_err(|e| invalid(format!("malformed {what}: {e}")))
}

fn check_degree(flag: Option<usize>, actual: usize) -> Result<(), Failure> {
    match flag {
        Some(d) if d != actual => Err(invalid(format!(
            "--degree {d} does not match input degree {actual}"
        ))),
        _ => Ok(()),
    }
}

fn family_degree(flag: Option<usize>, actual: usize) -> Result<Degree, Failure> {
    check_degree(flag, actual)?;
    Ok(Degree::try_from(actual)?)
}

fn forward(io: &IoArgs, stdin: &mut dyn Read) -> Result<Emit, Failure> {
    tolerances(io.tol)?;
    let params: JsonParams = decode(read_input(&io.input, stdin)?, "parameters")?;
    check_degree(io.degree, params.degree)?;
    let poly = params.to_params()?.forward()?;
    Ok(json_line(EXIT_OK, &JsonPolynomial::from_poly(&poly)))
}

/// Diagnosis for either family, plus the parameters to solve with when in family.
fn diagnose(
    poly: &MonicPoly,
    degree: Degree,
    gauge: &GaugeArgs,
    cfg: &ToleranceConfig,
) -> Result<(JsonDiagnosis, Option<Params>), Failure> {
    let alpha0 = gauge.gauge_alpha0.unwrap_or_default();
    match degree {
        Degree::Eight => {
            let beta0 = gauge.gauge_beta0.unwrap_or_default();
            let d = deg8::detect8_with_gauge(poly, cfg, (alpha0, beta0))?;
            Ok(((&d).into(), d.recovered.map(Params::Deg8)))
        }
        Degree::Nine => {
            if gauge.gauge_beta0.is_some() {
                return Err(invalid("--gauge-beta0 only applies to degree 8"));
            }
            let d = deg9::detect9_with_gauge(poly, cfg, alpha0)?;
            Ok(((&d).into(), d.recovered.map(Params::Deg9)))
        }
    }
}

fn not_in_family(degree: Degree) -> String {
    format!("polynomial is not in the degree-{degree} family")
}

fn solve(a: &SolveArgs, stdin: &mut dyn Read) -> Result<Emit, Failure> {
    let cfg = tolerances(a.io.tol)?;
    let value = read_input(&a.io.input, stdin)?;
    let is_params = value.get("params").is_some();

    if is_params {
        if a.oracle {
            return Err(invalid("--oracle takes a polynomial, not parameters"));
        }
        let params: JsonParams = decode(value, "parameters")?;
        check_degree(a.io.degree, params.degree)?;
        let (roots, trace) = params.to_params()?.solve(&cfg)?;
        let result = JsonResult {
            roots: Some(roots_json(&roots)),
            trace: Some((&trace).into()),
            ..Default::default()
        };
        return Ok(json_line(EXIT_OK, &result));
    }

    let poly: JsonPolynomial = decode(value, "polynomial")?;
    check_degree(a.io.degree, poly.degree)?;
    let poly = poly.to_poly()?;
    if a.oracle {
        let roots = durand_kerner(&poly, &cfg)?;
        return Ok(json_line(
            EXIT_OK,
            &JsonResult {
                roots: Some(roots_json(&roots)),
                ..Default::default()
            },
        ));
    }
    let degree = Degree::try_from(poly.degree())?;
    let (diagnosis, params) = diagnose(&poly, degree, &a.gauge, &cfg)?;
    let Some(params) = params else {
        let result = JsonResult {
            diagnosis: Some(diagnosis),
            errors: vec![not_in_family(degree)],
            ..Default::default()
        };
        return Ok(json_line(EXIT_NOT_IN_FAMILY, &result));
    };
    let (roots, trace) = params.solve(&cfg)?;
    // the recovered parameters generate `poly` only up to rel_residual, so
    // check the roots against the input itself
    let worst = poly.max_scaled_residual(roots.as_slice());
    if worst > cfg.rel_residual {
        return Err(Error::Numerical(format!(
            "root residual {worst:e} against the input exceeds {:e}",
            cfg.rel_residual
        ))
        .into());
    }
    let result = JsonResult {
        roots: Some(roots_json(&roots)),
        trace: Some(JsonTrace::from(&trace)),
        diagnosis: Some(diagnosis),
        ..Default::default()
    };
    Ok(json_line(EXIT_OK, &result))
}

fn detect(a: &DetectArgs, stdin: &mut dyn Read) -> Result<Emit, Failure> {
    let cfg = tolerances(a.io.tol)?;
    let poly: JsonPolynomial = decode(read_input(&a.io.input, stdin)?, "polynomial")?;
    let degree = family_degree(a.io.degree, poly.degree)?;
    let poly = poly.to_poly()?;
    let (diagnosis, _) = diagnose(&poly, degree, &a.gauge, &cfg)?;
    let code = if diagnosis.in_family {
        EXIT_OK
    } else {
        EXIT_NOT_IN_FAMILY
    };
    let errors = if diagnosis.in_family {
        vec![]
    } else {
        vec![not_in_family(degree)]
    };
    Ok(json_line(
        code,
        &JsonResult {
            diagnosis: Some(diagnosis),
            errors,
            ..Default::default()
        },
    ))
}

fn verify(io: &IoArgs, stdin: &mut dyn Read) -> Result<Emit, Failure> {
    let cfg = tolerances(io.tol)?;
    let input: JsonVerifyInput = decode(read_input(&io.input, stdin)?, "verify input")?;
    check_degree(io.degree, input.degree)?;
    let (poly, roots) = input.parts()?;
    let worst = poly.max_scaled_residual(&roots);
    let (code, errors) = if worst <= cfg.rel_residual {
        (EXIT_OK, vec![])
    } else {
        (
            EXIT_NUMERICAL,
            vec![format!(
                "max scaled residual {worst:e} exceeds {:e}",
                cfg.rel_residual
            )],
        )
    };
    Ok(json_line(
        code,
        &JsonResult {
            max_residual: Some(worst),
            errors,
            ..Default::default()
        },
    ))
}

fn gen_spec(g: &GenArgs) -> Result<GenSpec, Failure> {
    let spec = GenSpec {
        degree: Degree::try_from(g.degree)?,
        count: g.count,
        seed: g.seed,
        radius: g.radius,
        real_only: g.real_only,
        perturb: g.perturb,
    };
    spec.validate()?;
    Ok(spec)
}

fn gen(g: &GenArgs) -> Result<Emit, Failure> {
    tolerances(g.tol)?;
    let spec = gen_spec(g)?;
    let corpus = par_gen_instances(&spec)?;
    Ok(Emit {
        code: EXIT_OK,
        body: corpus_jsonl(&corpus),
    })
}

fn bench(g: &GenArgs) -> Result<Emit, Failure> {
    let cfg = tolerances(g.tol)?;
    let spec = gen_spec(g)?;
    let report = bench_compare(&spec, &cfg).map_err(|e| {
        let code = if e.core_error().is_invalid_input() {
            EXIT_INVALID
        } else {
            EXIT_NUMERICAL
        };
        Failure {
            code,
            message: e.to_string(),
        }
    })?;
    Ok(json_line(EXIT_OK, &report))
}
