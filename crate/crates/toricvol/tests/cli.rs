//! End-to-end tests of the command-line interface: exit codes, JSON
//! round-trips, determinism, and the machine-readable error contract.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_toricvol")
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn normvol_a1_surface() {
    let out = run(&["normvol", data("a1_surface.json").to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["value"], serde_json::json!(2.0));
    assert_eq!(v["value_exact"], serde_json::json!("2/1"));
    assert_eq!(v["bracket"], serde_json::json!([2.0, 2.0]));
    assert_eq!(v["ell"], serde_json::json!("1"));
}

#[test]
fn normvol_cross_check_agrees() {
    let out = run(&[
        "normvol",
        data("third_one_one.json").to_str().unwrap(),
        "--cross-check",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["value_exact"], serde_json::json!("4/3"));
    assert_eq!(v["ell"], serde_json::json!("3"));
    assert_eq!(v["cross_check"]["agrees"], serde_json::json!(true));
}

#[test]
fn verify_rdp_quadric_equality() {
    let out = run(&[
        "verify",
        data("quadric3.json").to_str().unwrap(),
        "--suite",
        "rdp",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let rep = &v["reports"][0];
    assert_eq!(rep["name"], serde_json::json!("rdp_bound"));
    assert_eq!(rep["holds"], serde_json::json!(true));
    assert_eq!(rep["equality_within_tol"], serde_json::json!(true));
}

#[test]
fn verify_thm35_reports_printed_failure_without_violation_exit() {
    let out = run(&[
        "verify",
        data("quadric3.json").to_str().unwrap(),
        "--suite",
        "thm35",
    ]);
    // Printed rows are informational: the asserted rows hold, exit 0.
    assert!(out.status.success());
    let v = stdout_json(&out);
    let reports = v["reports"].as_array().unwrap();
    let find = |name: &str| {
        reports
            .iter()
            .find(|r| r["name"] == serde_json::json!(name))
            .unwrap()
    };
    assert_eq!(find("thm35_eq1_printed")["holds"], serde_json::json!(false));
    assert_eq!(find("thm35_eq1_proof")["holds"], serde_json::json!(true));
}

#[test]
fn error_paths_exit_one_with_code() {
    let out = run(&["normvol", data("not_qgor.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    let line = err.lines().last().unwrap();
    assert!(
        line.starts_with("error[NotQGorenstein]:"),
        "diagnostic line: {}",
        line
    );

    let out = run(&["normvol", data("not_pointed.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error[NotPointed]"));

    let out = run(&["hull", data("planar_in_3d.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error[DegenerateInput]"));

    let out = run(&["dual", data("simplex2.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error[OriginNotInterior]"));

    // Unknown flags are rejected, not ignored.
    let out = run(&["normvol", data("a1_surface.json").to_str().unwrap(), "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error[Usage]"));
}

#[test]
fn hull_drops_non_vertices_and_round_trips() {
    let out = run(&["hull", data("square_with_interior_point.json").to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);

    // Round trip: feed the emitted polytope back through hull.
    let tmp = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(tmp.path(), out.stdout.clone()).unwrap();
    let again = run(&["hull", tmp.path().to_str().unwrap()]);
    assert!(again.status.success());
    assert_eq!(out.stdout, again.stdout, "byte-identical round trip");
}

#[test]
fn santalo_pyramid_residual() {
    let out = run(&["santalo", data("pyramid_square.json").to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert!(v["residual"].as_f64().unwrap() <= 1e-9);
    assert_eq!(v["exact"], serde_json::json!(false));
    // Mahler close to the closed form 8192/972.
    let m = v["mahler_float"].as_f64().unwrap();
    assert!((m - 8192.0 / 972.0).abs() / m < 1e-8);
}

#[test]
fn radon_square() {
    let out = run(&["radon", data("unit_square.json").to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    let parts = v["partitions"].as_array().unwrap();
    assert_eq!(parts.len(), 1);
    assert_eq!(parts[0]["p"], serde_json::json!(1));
    assert_eq!(
        parts[0]["radon_point"],
        serde_json::json!(["1/2", "1/2"])
    );
}

#[test]
fn verify_csv_output() {
    let out = run(&[
        "verify",
        data("a1_surface.json").to_str().unwrap(),
        "--suite",
        "euler",
        "--csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "name,lhs,rhs,holds,strict,equality_within_tol,notes"
    );
    assert!(text.contains("euler_conjecture_lower"));
}

#[test]
fn enumerate_csv_deterministic() {
    let tmp1 = tempfile::NamedTempFile::new().unwrap();
    let tmp2 = tempfile::NamedTempFile::new().unwrap();
    for tmp in [&tmp1, &tmp2] {
        let out = run(&[
            "enumerate",
            "--dim",
            "2",
            "--epsilon",
            "1.2",
            "--out",
            tmp.path().to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(tmp1.path()).unwrap();
    let b = std::fs::read(tmp2.path()).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b, "identical inputs produce byte-identical output");
    let text = String::from_utf8_lossy(&a);
    assert!(text.starts_with(
        "normal_form_key,ell,rays,volume_lower,volume_upper,passes_rdp,passes_bs"
    ));
    // volhat > 1.2: k <= 3: values 4, 2, 4/3 (two classes at k = 3).
    assert_eq!(text.lines().count(), 1 + 4);
}

#[test]
fn spectrum_csv() {
    let out = run(&["spectrum", "--dim", "2", "--epsilon", "0.9"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    // Values 4, 2, 4/3, 1: four rows plus header.
    assert_eq!(text.lines().count(), 5);
    assert!(text.contains("4/3"));
}

#[test]
fn version_flag() {
    let out = run(&["--version"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("toricvol"));
}
