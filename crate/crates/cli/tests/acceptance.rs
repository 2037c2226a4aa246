//! Acceptance suite. Runs every criterion at its pinned tolerance, prints one
//! PASS/FAIL line per criterion, and exits non-zero if any criterion fails.
//!
//! `cargo test -p nestsolve --test acceptance`

mod common;

use std::time::Instant;

use nestsolve_core::corpus::{gen_instances, GenSpec, Instance, Params};
use nestsolve_core::deg8::{self, ParamSet8};
use nestsolve_core::deg9::{self, ParamSet9};
use nestsolve_core::{
    durand_kerner, match_root_multisets, Complex, Degree, MonicPoly, RootSet, ToleranceConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CORPUS_SIZE: usize = 1000;
const CORPUS_SEED: u64 = 20_240_601;

// pinned tolerances
const ROOT_RESIDUAL: f64 = 1e-8;
const MIN_SEPARATION: f64 = 1e-3;
const PAIRING_TOL: f64 = 1e-6;
const FORMULA_REL: f64 = 1e-12;
const CONSTRAINT_TOL: f64 = 1e-10;
const PERTURB_MAG: f64 = 1e-2;
const PERTURB_FAIL_RATE: f64 = 0.99;
const ROUNDTRIP_REL: f64 = 1e-9;
const SHIFT_GAUGE_REL: f64 = 1e-10;
const FIXTURE_TOL: f64 = 1e-12;
const RUNTIME_BUDGET_S: f64 = 5.0;
const BENCH_COUNT: &str = "10000";

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn corpus(degree: Degree) -> Vec<Instance> {
    gen_instances(&GenSpec::new(degree, CORPUS_SIZE, CORPUS_SEED)).expect("corpus")
}

fn rel(a: &[Complex], b: &[Complex]) -> f64 {
    let scale = 1.0 + a.iter().map(|z| z.norm()).fold(0.0, f64::max);
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
        / scale
}

fn disk(rng: &mut ChaCha8Rng, r: f64) -> Complex {
    Complex::from_polar(
        r * rng.gen::<f64>().sqrt(),
        std::f64::consts::TAU * rng.gen::<f64>(),
    )
}

fn loose() -> ToleranceConfig {
    ToleranceConfig::default().with_rel_residual(ROOT_RESIDUAL)
}

fn c1_round_trip(c8: &[Instance], c9: &[Instance]) -> Verdict {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for inst in c8.iter().chain(c9) {
        let (roots, _) = inst
            .params
            .solve(&loose())
            .map_err(|e| format!("instance {}: {e}", inst.index))?;
        worst = worst.max(inst.poly.max_scaled_residual(roots.as_slice()));
    }
    let secs = start.elapsed().as_secs_f64();
    let detail =
        format!("worst scaled residual {worst:.3e} (limit {ROOT_RESIDUAL:e}), {secs:.3} s");
    if worst <= ROOT_RESIDUAL && secs < RUNTIME_BUDGET_S {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c2_oracle(c8: &[Instance], c9: &[Instance]) -> Verdict {
    let cfg = ToleranceConfig {
        pairing_tol: PAIRING_TOL,
        ..Default::default()
    };
    let (mut compared, mut mismatches) = (0, 0);
    for inst in c8.iter().chain(c9) {
        let (roots, _) = inst.params.solve(&cfg).map_err(|e| e.to_string())?;
        if roots.min_separation() < MIN_SEPARATION {
            continue;
        }
        compared += 1;
        let dk =
            durand_kerner(&inst.poly, &cfg).map_err(|e| format!("instance {}: {e}", inst.index))?;
        if !match_root_multisets(&roots, &dk, PAIRING_TOL)
            .unwrap()
            .is_paired()
        {
            mismatches += 1;
        }
    }
    let detail = format!("{compared} well-separated instances, {mismatches} mismatches");
    if mismatches == 0 && compared > 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c3_published_formulas(c8: &[Instance], c9: &[Instance]) -> Verdict {
    let (mut worst8, mut worst9, mut worst_c0_gap): (f64, f64, f64) = (0.0, 0.0, 0.0);
    let mut c0_differs = 0;
    for inst in c8 {
        let Params::Deg8(p) = inst.params else {
            unreachable!()
        };
        let truth = inst.poly.coeffs();
        let printed = deg8::published_coefficients8(&p);
        worst8 = worst8.max(rel(&truth[1..], &printed[1..]));
        // published c0 − true c0 should be exactly 2α0³β1(α0 − 1)
        let predicted = p.alpha0.powi(3) * p.beta1 * (p.alpha0 - 1.0) * 2.0;
        worst_c0_gap = worst_c0_gap.max(rel(&[truth[0] + predicted], &[printed[0]]));
        if rel(&truth[..1], &printed[..1]) > FORMULA_REL {
            c0_differs += 1;
        }
    }
    for inst in c9 {
        let Params::Deg9(p) = inst.params else {
            unreachable!()
        };
        worst9 = worst9.max(rel(inst.poly.coeffs(), &deg9::published_coefficients9(&p)));
    }
    println!(
        "      c0 (degree 8): published form differs from the expansion in {c0_differs}/{} instances; \
         the gap equals 2α0³β1(α0 − 1) to {worst_c0_gap:.1e}, i.e. the bracket term 2α0²β1 should read 2α0β1",
        c8.len()
    );
    let detail = format!(
        "c1..c7 worst {worst8:.1e}, 9 degree-9 formulas worst {worst9:.1e} (limit {FORMULA_REL:e})"
    );
    if worst8 <= FORMULA_REL && worst9 <= FORMULA_REL && worst_c0_gap <= FORMULA_REL {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn perturbed(poly: &MonicPoly, rng: &mut ChaCha8Rng) -> MonicPoly {
    let mut cs = poly.coeffs().to_vec();
    cs[5] += Complex::from_polar(PERTURB_MAG, std::f64::consts::TAU * rng.gen::<f64>());
    MonicPoly::new(cs).unwrap()
}

fn c4_constraints(c8: &[Instance], c9: &[Instance]) -> Verdict {
    let cfg = ToleranceConfig::default();
    let mut worst: f64 = 0.0;
    for inst in c8 {
        worst = worst.max(
            deg8::constraints8(&inst.poly)
                .unwrap()
                .into_iter()
                .fold(0.0, f64::max),
        );
    }
    for inst in c9 {
        worst = worst.max(
            deg9::constraints9(&inst.poly)
                .unwrap()
                .into_iter()
                .fold(0.0, f64::max),
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let fail8 = c8
        .iter()
        .filter(|i| {
            !deg8::detect8(&perturbed(&i.poly, &mut rng), &cfg)
                .unwrap()
                .in_family
        })
        .count();
    let fail9 = c9
        .iter()
        .filter(|i| {
            !deg9::detect9(&perturbed(&i.poly, &mut rng), &cfg)
                .unwrap()
                .in_family
        })
        .count();
    let (r8, r9) = (
        fail8 as f64 / c8.len() as f64,
        fail9 as f64 / c9.len() as f64,
    );
    let detail = format!(
        "worst residual on image {worst:.1e} (limit {CONSTRAINT_TOL:e}); perturbed c5 rejected {:.1}% / {:.1}%",
        100.0 * r8,
        100.0 * r9
    );
    if worst <= CONSTRAINT_TOL && r8 >= PERTURB_FAIL_RATE && r9 >= PERTURB_FAIL_RATE {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c5_recovery(c8: &[Instance], c9: &[Instance]) -> Verdict {
    let zero = Complex::new(0.0, 0.0);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut rt, mut gauge8, mut shift9): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for inst in c8 {
        let p = deg8::recover8(&inst.poly, zero, zero).unwrap();
        rt = rt.max(inst.poly.relative_distance(&deg8::forward8(&p).unwrap()));
        for _ in 0..10 {
            let q = deg8::recover8(&inst.poly, disk(&mut rng, 2.0), disk(&mut rng, 2.0)).unwrap();
            gauge8 = gauge8.max(inst.poly.relative_distance(&deg8::forward8(&q).unwrap()));
        }
    }
    for inst in c9 {
        let p = deg9::recover9(&inst.poly, zero).unwrap();
        rt = rt.max(inst.poly.relative_distance(&deg9::forward9(&p).unwrap()));
    }
    for inst in c9.iter().take(100) {
        let Params::Deg9(p) = inst.params else {
            unreachable!()
        };
        let shifted = deg9::shift_gauge9(&p, disk(&mut rng, 2.0)).unwrap();
        shift9 = shift9.max(
            inst.poly
                .relative_distance(&deg9::forward9(&shifted).unwrap()),
        );
    }
    let detail = format!(
        "round trip {rt:.1e}, degree-8 gauges {gauge8:.1e} (limit {ROUNDTRIP_REL:e}); degree-9 shift gauge {shift9:.1e} (limit {SHIFT_GAUGE_REL:e})"
    );
    if rt <= ROUNDTRIP_REL && gauge8 <= ROUNDTRIP_REL && shift9 <= SHIFT_GAUGE_REL {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn pairs_within(got: &RootSet, want: Vec<Complex>, tol: f64) -> Result<f64, String> {
    let m = match_root_multisets(got, &RootSet::new(want).unwrap(), tol).unwrap();
    if m.is_paired() {
        Ok(m.distance())
    } else {
        Err(format!("distance {:.1e}", m.distance()))
    }
}

fn c6_fixtures() -> Verdict {
    let cfg = ToleranceConfig::default();
    let re = |x: f64| Complex::new(x, 0.0);
    let zero = re(0.0);
    let i = Complex::i();

    let q = 2f64.powf(0.25);
    let p8 = ParamSet8::new([zero, zero, zero, zero, re(2.0), re(-3.0)]).unwrap();
    let (r8, _) = deg8::solve8(&p8, &cfg).map_err(|e| e.to_string())?;
    let d8 = pairs_within(
        &r8,
        vec![re(1.0), re(-1.0), i, -i, re(q), re(-q), i * q, -i * q],
        FIXTURE_TOL,
    )?;

    let p9 = ParamSet9::new([zero, zero, zero, re(6.0), re(-7.0), zero]).unwrap();
    let (r9, _) = deg9::solve9(&p9, &cfg).map_err(|e| e.to_string())?;
    let omega = Complex::from_polar(1.0, std::f64::consts::TAU / 3.0);
    let mut want = Vec::new();
    for w in [1.0f64, 2.0, -3.0] {
        let r = re(w.signum() * w.abs().cbrt());
        want.extend([r, r * omega, r * omega * omega]);
    }
    let d9 = pairs_within(&r9, want, FIXTURE_TOL)?;

    let quartic =
        MonicPoly::new([0.0, 0.0, 0.0, 0.0, 1.0, 4.0, 6.0, 4.0].map(re).to_vec()).unwrap();
    let d = deg8::detect8(&quartic, &cfg).unwrap();
    let expected = [zero, re(1.0), zero, zero, zero, zero];
    let got = d.recovered.ok_or("(z²+z)⁴ not detected")?.to_array();
    let drec = rel(&expected, &got);
    let detail = format!(
        "z⁸−3z⁴+2 {d8:.1e}, z⁹−7z³+6 {d9:.1e}, (z²+z)⁴ recovery {drec:.1e} (limit {FIXTURE_TOL:e})"
    );
    if drec <= FIXTURE_TOL {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c7_bench() -> Verdict {
    let mut lines = Vec::new();
    let mut ok = true;
    for degree in ["8", "9"] {
        let out = common::call(
            &[
                "bench",
                "--degree",
                degree,
                "--count",
                BENCH_COUNT,
                "--seed",
                "3",
            ],
            "",
        );
        if out.code != 0 {
            return Err(format!(
                "degree {degree}: exit {} {}",
                out.code,
                out.stderr.trim()
            ));
        }
        let v: serde_json::Value = serde_json::from_str(&out.stdout).map_err(|e| e.to_string())?;
        let mismatches = v["mismatches"].as_u64().unwrap();
        ok &= mismatches == 0;
        lines.push(format!(
            "degree {degree}: mismatches {mismatches}, clustered {}, speedup {:.2}x",
            v["clustered"],
            v["speedup_ratio"].as_f64().unwrap()
        ));
    }
    let detail = lines.join("; ");
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn c8_golden() -> Verdict {
    for (name, args, stdin) in common::GOLDEN_CASES {
        let a = common::run_golden_case(args, stdin);
        let b = common::run_golden_case(args, stdin);
        if a.code != 0 || b.code != 0 {
            return Err(format!("{name}: exit {}", a.code));
        }
        let (sa, sb) = (
            common::stable_stdout(name, &a.stdout),
            common::stable_stdout(name, &b.stdout),
        );
        if sa != sb {
            return Err(format!("{name}: runs differ"));
        }
        let golden =
            std::fs::read_to_string(common::golden(name)).map_err(|e| format!("{name}: {e}"))?;
        if sa != golden {
            return Err(format!("{name}: differs from golden file"));
        }
    }
    Ok("6 invocations stable across runs and equal to golden files (bench compared without timing fields)".into())
}

fn main() {
    let c8 = corpus(Degree::Eight);
    let c9 = corpus(Degree::Nine);
    let criteria: Vec<Criterion> = vec![
        (
            "1 forward-solve round trip",
            Box::new(|| c1_round_trip(&c8, &c9)),
        ),
        ("2 oracle equivalence", Box::new(|| c2_oracle(&c8, &c9))),
        (
            "3 published-formula cross-check",
            Box::new(|| c3_published_formulas(&c8, &c9)),
        ),
        (
            "4 constraint manifold",
            Box::new(|| c4_constraints(&c8, &c9)),
        ),
        (
            "5 recovery and gauge invariance",
            Box::new(|| c5_recovery(&c8, &c9)),
        ),
        ("6 closed-form fixtures", Box::new(c6_fixtures)),
        ("7 benchmark report", Box::new(c7_bench)),
        ("8 CLI golden stability", Box::new(c8_golden)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
