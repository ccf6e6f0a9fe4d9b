use std::process::Command as Proc;

use serde_json::Value;
use trignn_cli::{run, EXIT_INCONCLUSIVE, EXIT_IO, EXIT_NEGATIVE, EXIT_NONNEGATIVE, EXIT_USAGE};

fn call(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("trignn").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> (u8, Value) {
    let (code, out, err) = call(args);
    assert!(err.is_empty(), "{err}");
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn certify_examples() {
    let (code, v) = json(&["certify", "sine", "5/4,1,1/4"]);
    assert_eq!(code, EXIT_NONNEGATIVE);
    assert_eq!(v["status"], "nonnegative");
    assert_eq!(v["certificate"]["kind"], "sturm");

    let (code, v) = json(&["certify", "sine", "1,1,1,3/5"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(v["witness_variable"], "algebraic_x");
    let angle = v["witness_angle"].as_f64().unwrap();
    assert!((angle - std::f64::consts::FRAC_PI_2).abs() < 0.1, "{angle}");
    assert!(v["witness_value"].as_str().unwrap().starts_with('-'));

    let (code, v) = json(&["certify", "sine", "0"]);
    assert_eq!(code, EXIT_NONNEGATIVE);
    assert_eq!(v["status"], "nonnegative");

    let (code, v) = json(&["certify", "cosine", "-1,2"]);
    assert_eq!(code, EXIT_NEGATIVE);
    let x = trignn::scalar::parse_rational(v["witness_x"].as_str().unwrap()).unwrap();
    assert!(x < trignn::scalar::rat(1, 2));
}

#[test]
fn interval_method() {
    let (code, v) = json(&["certify", "sine", "1,1/4", "--method", "interval"]);
    assert_eq!(code, EXIT_NONNEGATIVE);
    assert_eq!(v["certificate"]["kind"], "interval");
    let (code, v) = json(&["certify", "sine", "-1", "--method", "interval"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(v["witness_variable"], "angle");
    let (code, v) = json(&["--max-depth", "6", "certify", "sine", "5/4,1,1/4", "--method", "interval"]);
    assert_eq!(code, EXIT_INCONCLUSIVE);
    assert_eq!(v["status"], "inconclusive");
}

#[test]
fn parse_errors_exit_64() {
    for args in [
        &["certify", "sine", "0.5"][..],
        &["certify", "sine", ""],
        &["certify", "sine", "1/0"],
        &["certify", "tangent", "1"],
        &["criteria", "a,b"],
        &["family", "bogus:3"],
        &["kappa0", "2", "1/2"],
        &["kappa0", "3", "1/2", "--tol", "1e-6"],
        &["characterize", "sine3", "1", "x", "0"],
        &["nonsense"],
    ] {
        let (code, out, err) = call(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn criteria_examples() {
    let (_, v) = json(&["criteria", "4,3,2,2,1"]);
    assert_eq!(v["details"]["belov_ok"], false);
    assert_eq!(v["sums"]["belov_partial_sums"][1], "-2");
    let (_, v) = json(&["criteria", "1,1,1,1/2"]);
    assert_eq!(v["sums"]["nec_at_pi"]["first_sum"], "0");
    assert_eq!(v["sums"]["nec_at_pi"]["third_sum"], "-12");
    assert_eq!(v["sums"]["nec_at_pi"]["pass"], true);
    let (code, v) = json(&["criteria", "1"]);
    assert_eq!(code, EXIT_NONNEGATIVE);
    assert_eq!(v["details"]["belov_ok"], true);
    assert_eq!(v["sums"]["nec_at_0"]["pass"], true);
    assert_eq!(v["sums"]["nec_at_pi"]["pass"], true);
}

#[test]
fn kappa0_examples() {
    let (_, v) = json(&["kappa0", "3", "0"]);
    assert_eq!((v["kappa0_lo"].as_str(), v["method"].as_str()), (Some("2"), Some("closed_form_line")));
    let (_, v) = json(&["kappa0", "3", "1/2"]);
    assert_eq!((v["kappa0_hi"].as_str(), v["method"].as_str()), (Some("1"), Some("closed_form_curve")));
    let (_, v) = json(&["kappa0", "5", "2/5"]);
    assert_eq!(v["method"], "bisection");
    let lo = trignn::scalar::parse_rational(v["kappa0_lo"].as_str().unwrap()).unwrap();
    let hi = trignn::scalar::parse_rational(v["kappa0_hi"].as_str().unwrap()).unwrap();
    let q = |k| trignn::region::membership(&trignn::region::RegionQuery::new(5, k, trignn::scalar::rat(2, 5)).unwrap());
    assert!(q(hi).is_nonnegative());
    assert!(q(lo).is_negative());
    let (_, v) = json(&["kappa0", "3", "-1", "--bisect"]);
    assert_eq!(v["method"], "bisection");
}

#[test]
fn boundary_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("n3.csv");
    let (code, v) = json(&["boundary", "3", "-1", "2", "61", "--out", csv.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["details"]["rows"], 61);
    assert_eq!(v["details"]["lowest_at_lambda"], "1/2");
    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 61);
    assert!(rows[20].starts_with("0.00000000,2.000000,2.000000"), "{}", rows[20]);
    assert!(rows[25].starts_with("0.25000000,1.250000,1.250000"), "{}", rows[25]);
    assert!(rows[30].starts_with("0.50000000,1.000000,1.000000"), "{}", rows[30]);

    let svg = dir.path().join("n3.svg");
    let (code, _) = json(&["boundary", "3", "0", "1", "2", "--format", "svg", "--out", svg.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));

    let missing = dir.path().join("no/such/dir/out.csv");
    let (code, _, err) = call(&["boundary", "3", "0", "1", "2", "--out", missing.to_str().unwrap()]);
    assert_eq!(code, EXIT_IO);
    assert!(err.contains("cannot write"));
    assert_eq!(call(&["boundary", "3", "0", "1", "1", "--out", "x.csv"]).0, EXIT_USAGE);
}

#[test]
fn characterize_examples() {
    let (code, v) = json(&["characterize", "sine3", "5/4", "1", "1/4"]);
    assert_eq!(code, EXIT_NONNEGATIVE);
    assert_eq!(v["details"]["case"], "i");
    assert_eq!(v["details"]["margin"], "0");
    let (code, v) = json(&["characterize", "cosine2", "1", "2", "1/4"]);
    assert_eq!(code, EXIT_NEGATIVE);
    assert_eq!(v["details"]["margin"], "-3/4");
    let (code, _) = json(&["characterize", "sine3", "1", "0", "0"]);
    assert_eq!(code, EXIT_NONNEGATIVE);
    let (code, _) = json(&["characterize", "sine3", "-1", "-1/2", "0"]);
    assert_eq!(code, EXIT_NEGATIVE);
}

#[test]
fn family_examples() {
    let (code, v) = json(&["family", "phi:9"]);
    assert_eq!(code, EXIT_NONNEGATIVE);
    assert_eq!(v["details"]["coefficients"][8], "5/12");
    let (code, _) = json(&["family", "sigma:6"]);
    assert_eq!(code, EXIT_NONNEGATIVE);
    let (code, v) = json(&["family", "theta-:2"]);
    assert_eq!(code, EXIT_NONNEGATIVE);
    assert_eq!(v["details"]["coefficients"], serde_json::json!(["2", "-1"]));
}

#[test]
fn schema_is_shared_and_runs_are_deterministic() {
    let runs: [&[&str]; 4] = [
        &["certify", "sine", "1,1/2"],
        &["criteria", "1,1/2"],
        &["kappa0", "4", "1/4"],
        &["family", "lukacs:3"],
    ];
    for args in runs {
        let (_, mut a) = json(args);
        let (_, mut b) = json(args);
        for key in ["command", "input", "status", "timings_ms"] {
            assert!(a.get(key).is_some(), "{args:?} lacks {key}");
        }
        a.as_object_mut().unwrap().remove("timings_ms");
        b.as_object_mut().unwrap().remove("timings_ms");
        assert_eq!(a, b);
    }
    let (_, v) = json(&["--seed", "42", "certify", "sine", "1"]);
    assert_eq!(v["input"]["seed"], 42);
    let (_, text, _) = call(&["--json", "false", "kappa0", "3", "1/2"]);
    assert_eq!(text.trim(), "kappa0: ok kappa0 in [1, 1] (closed_form_curve)");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_trignn");
    let code = |args: &[&str]| Proc::new(bin).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(code(&["certify", "sine", "5/4,1,1/4"]), 0);
    assert_eq!(code(&["certify", "sine", "1,1,1,3/5"]), 1);
    assert_eq!(code(&["--max-depth", "4", "certify", "sine", "5/4,1,1/4", "--method", "interval"]), 2);
    assert_eq!(code(&["certify", "sine", "0.5"]), 64);
}
