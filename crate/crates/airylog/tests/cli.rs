use std::process::{Command, Output};

use airylog::output::{ACCELERATE_HEADER, COEFFS_HEADER, SERIES_HEADER};
use airylog_core::{CoefficientTable, SigmaSet};

fn airylog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_airylog")).args(args).output().expect("run binary")
}

#[test]
fn first_coefficient_as_json() {
    let out = airylog(&["coeffs", "--k-max", "1", "--format", "json"]);
    assert!(out.status.success());
    let t: CoefficientTable = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(t.rows.len(), 1);
    assert!((t.rows[0].a_k_bell - 1.207_485_927_824_607_8).abs() < 1e-13);
}

#[test]
fn bad_arguments_exit_with_usage_code() {
    for args in [
        &["coeffs", "--k-max", "0"][..],
        &["coeffs", "--k-max", "61"],
        &["oracle", "--tol", "1e-14"],
        &["fit", "--fit-lo", "20", "--fit-hi", "10"],
        &["frobnicate"],
        &["coeffs", "--format", "xml"],
    ] {
        let out = airylog(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_files_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    for p in [&p1, &p2] {
        let out = airylog(&["coeffs", "--format", "csv", "--out", p.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    let a = std::fs::read(&p1).unwrap();
    assert_eq!(a, std::fs::read(&p2).unwrap());
    assert!(!a.contains(&b'\r'));
}

fn header_of(args: &[&str]) -> String {
    let out = airylog(args);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap().lines().next().unwrap().to_string()
}

#[test]
fn csv_headers() {
    assert_eq!(header_of(&["coeffs", "--format", "csv"]), COEFFS_HEADER.join(","));
    assert_eq!(header_of(&["series", "--format", "csv"]), SERIES_HEADER.join(","));
    assert_eq!(header_of(&["accelerate", "--format", "csv"]), ACCELERATE_HEADER.join(","));
}

#[test]
fn coeffs_csv_has_one_row_per_k() {
    let out = airylog(&["coeffs", "--k-max", "12", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn sigmas_json_round_trips() {
    let out = airylog(&["sigmas", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["sigma2_printed_flagged"], true);
    let s: SigmaSet = serde_json::from_value(v).unwrap();
    assert!((s.sigma1_direct - -0.038_989_358_8).abs() < 1e-8);
}

#[test]
fn published_fit_switches_tail_source() {
    let out = airylog(&["accelerate", "--use-paper-fit", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["used_published_fit"], true);
    assert_eq!(v["a"], 0.751653834);
}

#[test]
fn verify_reports_failure_through_exit_code() {
    let out = airylog(&["verify"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]") || l.starts_with("[FAIL]")).count(), 12);
    let any_fail = text.contains("[FAIL]");
    assert_eq!(out.status.code(), Some(if any_fail { 1 } else { 0 }));
}
