use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tspread")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["rank", "--n", "16"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    // A monomial that is not 3-spread.
    let out = run(&["rank", "--n", "16", "--t", "3", "--k", "6", "--l", "4", "--monomial", "4,5,13,16"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn solve_exit_codes_follow_the_verdict() {
    let feasible = run(&["solve", "--spec", fixture("worked_spec.json").to_str().unwrap()]);
    assert_eq!(feasible.status.code(), Some(0));
    let infeasible = run(&["solve", "--spec", fixture("small_infeasible_spec.json").to_str().unwrap()]);
    assert_eq!(infeasible.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n":9,"t":2,"corners":[{"k":1,"l":2,"a":1},{"k":3,"l":3,"a":1}]}"#).unwrap();
    let out = run(&["solve", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["verdict"], "invalid");

    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(run(&["solve", "--spec", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn report_file_and_emitted_ideal_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let ideal = dir.path().join("ideal.json");
    let out = run(&[
        "solve",
        "--spec",
        fixture("worked_spec.json").to_str().unwrap(),
        "--report",
        report.to_str().unwrap(),
        "--emit-ideal",
        ideal.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(report["verdict"], "feasible");

    let corners = run(&["corners", "--ideal", ideal.to_str().unwrap()]);
    assert_eq!(
        json(&corners),
        serde_json::json!({"corners": [[6, 2], [5, 4], [4, 5], [3, 7]], "values": [2, 1, 3, 2]})
    );
    let m2 = run(&["betti", "--ideal", ideal.to_str().unwrap(), "--format", "m2"]);
    let text = String::from_utf8(m2.stdout).unwrap();
    assert!(text.starts_with("R = QQ[x_1..x_25];"));
    assert!(text.contains("x_1*x_4"));
}

#[test]
fn list_commands() {
    let out = run(&["enumerate", "--n", "7", "--t", "2", "--d", "2"]);
    assert_eq!(json(&out).as_array().unwrap().len(), 15);

    let out = run(&["enumerate", "--n", "16", "--t", "3", "--k", "6", "--l", "4", "--format", "text"]);
    let expected = std::fs::read_to_string(fixture("segment_6_4.txt")).unwrap();
    let got = String::from_utf8(out.stdout).unwrap();
    assert_eq!(got.lines().count(), 84);
    assert!(got.starts_with(&expected));

    let out = run(&["closure", "--n", "8", "--t", "2", "--gens", "[[2,5]]", "--minimal"]);
    assert_eq!(json(&out), serde_json::json!([[1, 3], [1, 4], [1, 5], [2, 4], [2, 5]]));

    let out = run(&["min-bshad", "--n", "19", "--t", "4", "--monomial", "9,14,19", "--k2", "6", "--l2", "4"]);
    assert_eq!(json(&out), serde_json::json!([[7, 11, 15, 19]]));

    let out = run(&["successor", "--n", "16", "--t", "3", "--k", "6", "--l", "4", "--monomial", "4,9,13,16"]);
    assert_eq!(json(&out), serde_json::json!([[4, 10, 13, 16]]));

    let out = run(&["max-corners", "--n", "25", "--t", "3", "--l1", "2"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "7");
}

#[test]
fn cell_limit_is_enforced() {
    let out = Command::new(env!("CARGO_BIN_EXE_tspread"))
        .args(["enumerate", "--n", "30", "--t", "1", "--d", "10"])
        .env("TSPREAD_MAX_CELLS", "1000")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("TSPREAD_MAX_CELLS"));

    let out = Command::new(env!("CARGO_BIN_EXE_tspread"))
        .args(["enumerate", "--n", "7", "--t", "2", "--d", "2"])
        .env("TSPREAD_MAX_CELLS", "1000")
        .output()
        .unwrap();
    assert!(out.status.success());
}
