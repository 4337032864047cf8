use std::process::Command;

use partalg::blocks::BlockDecomposition;
use partalg::LabeledMatrix;

fn partalg(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_partalg")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn abacus_with_marker() {
    let (code, out, _) = partalg(&["abacus", "2,1", "--beads", "7", "--p", "5", "--delta", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("beta_delta: 10,8,6,4,3,2,1,0"), "{out}");
    assert!(out.contains("marker runner: 0"));
}

#[test]
fn abacus_json() {
    let (code, out, _) = partalg(&["abacus", "5,4", "--beads", "10", "--p", "5", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["gamma"], serde_json::json!([2, 2, 3, 1, 2]));
    assert_eq!(v["core"], serde_json::json!([3, 1]));
}

#[test]
fn multiply_and_usage_errors() {
    let (code, out, _) = partalg(&["multiply", "1 -1 | 2 -2", "1 2 | -1 -2", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "δ^0 * 1 2 | -1 -2");
    assert_eq!(partalg(&["multiply", "1 -1", "1 -1 | 2 -2", "--n", "2"]).0, 2);
    assert_eq!(partalg(&["multiply", "1 -1"]).0, 2);
    assert_eq!(partalg(&["frobnicate"]).0, 2);
}

#[test]
fn blocks_json_round_trips() {
    let (code, out, _) = partalg(&["blocks", "--n", "5", "--p", "5", "--delta", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let b = BlockDecomposition::from_json(&out).unwrap();
    assert_eq!(BlockDecomposition::from_json(&b.to_json()).unwrap(), b);
}

#[test]
fn decomp_formats_agree() {
    let base = ["decomp", "--n", "3", "--p", "5", "--delta", "1"];
    let json = partalg(&[&base[..], &["--format", "json"]].concat()).1;
    let csv = partalg(&[&base[..], &["--format", "csv"]].concat()).1;
    let m = LabeledMatrix::from_json(&json).unwrap();
    assert_eq!(LabeledMatrix::from_csv(m.n, m.field, &m.delta, &csv).unwrap(), m);
}

#[test]
fn decomp_exit_codes() {
    let (code, out, _) = partalg(&["decomp", "--n", "3", "--p", "3", "--delta", "2", "--method", "both"]);
    assert_eq!(code, 0);
    assert!(out.contains("THEOREM") && out.contains("ORACLE") && out.contains("DIFF\nnone"));
    let (code, _, err) = partalg(&["decomp", "--n", "4", "--p", "3", "--delta", "1"]);
    assert_eq!(code, 3);
    assert!(!err.is_empty());
    let (code, out, _) = partalg(&["decomp", "--n", "4", "--p", "3", "--delta", "1", "--method", "both"]);
    assert_eq!(code, 3);
    assert!(out.contains("ORACLE"));
}

#[test]
fn oracle_runs_are_byte_identical() {
    let args = ["decomp", "--n", "4", "--p", "3", "--delta", "1", "--method", "oracle", "--seed", "11"];
    let a = partalg(&args).1;
    assert_eq!(partalg(&args).1, a);
    assert_eq!(partalg(&[&args[..], &["--jobs", "3"]].concat()).1, a);
}

#[test]
fn verify_core_suite() {
    let (code, out, _) = partalg(&["verify", "--suite", "core", "--seed", "7"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.contains("PASS")).count(), 5);
}
