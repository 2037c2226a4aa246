use nestsolve_core::corpus::{gen_instances, in_family, GenSpec, Perturbation};
use nestsolve_core::deg8::{self, ParamSet8};
use nestsolve_core::deg9;
use nestsolve_core::{
    durand_kerner, match_root_multisets, Complex, Degree, MonicPoly, RootSet, ToleranceConfig,
};

fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

#[test]
fn solve_from_coefficients_via_detection() {
    let cfg = ToleranceConfig::default();
    let poly = MonicPoly::new([2.0, 0.0, 0.0, 0.0, -3.0, 0.0, 0.0, 0.0].map(re).to_vec()).unwrap();
    let d = deg8::detect8(&poly, &cfg).unwrap();
    assert!(d.in_family);
    let (roots, _) = deg8::solve8(&d.recovered.unwrap(), &cfg).unwrap();
    assert!(poly.max_scaled_residual(roots.as_slice()) < 1e-12);
    let dk = durand_kerner(&poly, &cfg).unwrap();
    assert!(match_root_multisets(&roots, &dk, 1e-9).unwrap().is_paired());
}

#[test]
fn cube_root_fixture_through_detection() {
    let cfg = ToleranceConfig::default();
    let poly = MonicPoly::new(
        [6.0, 0.0, 0.0, -7.0, 0.0, 0.0, 0.0, 0.0, 0.0]
            .map(re)
            .to_vec(),
    )
    .unwrap();
    let d = deg9::detect9(&poly, &cfg).unwrap();
    assert!(d.in_family);
    let (roots, _) = deg9::solve9(&d.recovered.unwrap(), &cfg).unwrap();
    let omega = Complex::from_polar(1.0, std::f64::consts::TAU / 3.0);
    let mut want = Vec::new();
    for w in [1.0f64, 2.0, -3.0] {
        let r = re(w.signum() * w.abs().cbrt());
        want.extend([r, r * omega, r * omega * omega]);
    }
    let want = RootSet::new(want).unwrap();
    assert!(match_root_multisets(&roots, &want, 1e-12)
        .unwrap()
        .is_paired());
}

#[test]
fn corpus_instances_roundtrip_through_recovery() {
    let cfg = ToleranceConfig::default();
    for degree in [Degree::Eight, Degree::Nine] {
        for inst in gen_instances(&GenSpec::new(degree, 200, 11)).unwrap() {
            assert!(in_family(&inst.poly, &cfg).unwrap());
            let (roots, _) = inst.params.solve(&cfg).unwrap();
            assert!(inst.poly.max_scaled_residual(roots.as_slice()) < 1e-9);
        }
    }
}

#[test]
fn perturbed_corpus_leaves_family() {
    let cfg = ToleranceConfig::default();
    for degree in [Degree::Eight, Degree::Nine] {
        let mut spec = GenSpec::new(degree, 100, 5);
        spec.perturb = Some(Perturbation {
            index: 5,
            magnitude: 1e-2,
        });
        let rejected = gen_instances(&spec)
            .unwrap()
            .iter()
            .filter(|inst| !in_family(&inst.poly, &cfg).unwrap())
            .count();
        assert!(rejected >= 99, "{degree}: only {rejected} rejected");
    }
}

#[test]
fn wrong_degree_is_invalid_input() {
    let cfg = ToleranceConfig::default();
    let poly = MonicPoly::new(vec![re(1.0); 9]).unwrap();
    assert!(deg8::detect8(&poly, &cfg).unwrap_err().is_invalid_input());
    let bad = ParamSet8::new([re(f64::NAN), re(0.0), re(0.0), re(0.0), re(0.0), re(0.0)]);
    assert!(bad.is_err_and(|e| e.is_invalid_input()));
}
