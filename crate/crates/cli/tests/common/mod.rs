#![allow(dead_code)]

use std::path::PathBuf;

use nestsolve::Outcome;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn call(args: &[&str], stdin: &str) -> Outcome {
    let argv = std::iter::once("nestsolve").chain(args.iter().copied());
    nestsolve::run(argv, &mut stdin.as_bytes())
}

pub fn call_fixture(args: &[&str], name: &str) -> Outcome {
    let input = std::fs::read_to_string(fixture(name)).unwrap();
    call(args, &input)
}

/// One golden invocation per subcommand: (golden file, argv, stdin fixture).
pub const GOLDEN_CASES: [(&str, &[&str], Option<&str>); 6] = [
    (
        "forward_deg8.out",
        &["forward", "--degree", "8"],
        Some("forward_deg8.json"),
    ),
    (
        "solve_deg9.out",
        &["solve", "--degree", "9"],
        Some("solve_deg9.json"),
    ),
    (
        "detect_deg8.out",
        &["detect", "--degree", "8"],
        Some("detect_deg8.json"),
    ),
    (
        "verify_deg8.out",
        &["verify", "--degree", "8"],
        Some("verify_deg8.json"),
    ),
    (
        "gen_deg8.out",
        &["gen", "--degree", "8", "--count", "3", "--seed", "42"],
        None,
    ),
    (
        "bench_deg9.out",
        &["bench", "--degree", "9", "--count", "20", "--seed", "3"],
        None,
    ),
];

/// Timing fields of a bench report, which vary between runs.
pub const TIMING_FIELDS: [&str; 3] = ["closed_form_total_ns", "oracle_total_ns", "speedup_ratio"];

pub fn run_golden_case(args: &[&str], stdin: Option<&str>) -> Outcome {
    match stdin {
        Some(name) => call_fixture(args, name),
        None => call(args, ""),
    }
}

/// Stdout with wall-clock fields removed, for comparing bench output.
pub fn strip_timing(stdout: &str) -> String {
    let mut v: serde_json::Value = serde_json::from_str(stdout).unwrap();
    let obj = v.as_object_mut().unwrap();
    for k in TIMING_FIELDS {
        obj.remove(k);
    }
    serde_json::to_string(&v).unwrap()
}

/// The stable part of a golden invocation's stdout.
pub fn stable_stdout(golden_name: &str, stdout: &str) -> String {
    if golden_name.starts_with("bench") {
        strip_timing(stdout)
    } else {
        stdout.to_string()
    }
}
