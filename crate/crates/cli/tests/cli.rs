use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], input: &str) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_tractmat"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

fn krasner_u23() -> String {
    json!({"tract": {"kind": "krasner"}, "n": 3, "r": 2, "values": {"0,1": "1", "0,2": "1", "1,2": "1"}}).to_string()
}

#[test]
fn check_gp_accepts_u23() {
    let (code, v) = run(&["check-gp"], &krasner_u23());
    assert_eq!(code, 0);
    assert_eq!(v, json!({"gp1": "ok", "gp3": "ok"}));
}

#[test]
fn check_gp_reports_three_term_failure() {
    let phi = json!({"tract": {"kind": "tropical"}, "n": 4, "r": 2,
        "values": {"0,1": "1", "0,2": "3", "0,3": "1", "1,2": "1", "1,3": "1", "2,3": "1"}});
    let (code, v) = run(&["check-gp"], &phi.to_string());
    assert_eq!(code, 1);
    assert_eq!(v["gp3"], "failed");
    assert_eq!(v["tuple"], json!([0, 1, 2, 3]));
}

#[test]
fn dual_of_u23_has_rank_one() {
    let (code, v) = run(&["dual"], &krasner_u23());
    assert_eq!(code, 0);
    assert_eq!(v["r"], 1);
    assert_eq!(v["values"], json!({"0": "1", "1": "1", "2": "1"}));
}

#[test]
fn malformed_input_exits_two() {
    let (code, v) = run(&["dual"], "{not json");
    assert_eq!(code, 2);
    assert!(v["error"].is_string());
    let (code, _) = run(&["dual"], r#"{"tract": {"kind": "krasner"}, "n": 3, "r": 2, "values": {"1,0": "1"}}"#);
    assert_eq!(code, 2);
}

#[test]
fn lattice_round_trip() {
    let (_, lattice) = run(&["tflats"], &krasner_u23());
    let (code, v) = run(&["check-lf"], &lattice.to_string());
    assert_eq!(code, 0, "{v}");
    let (code, phi) = run(&["gp-from-lattice"], &lattice.to_string());
    assert_eq!(code, 0);
    assert_eq!(phi["values"], json!({"0,1": "1", "0,2": "1", "1,2": "1"}));
}

#[test]
fn dropping_a_hyperplane_violates_lf() {
    let (_, mut lattice) = run(&["tflats"], &krasner_u23());
    let flats = lattice["flats"].as_array_mut().unwrap();
    let i = flats.iter().position(|f| f["F"] == json!([0])).unwrap();
    flats.remove(i);
    let (code, v) = run(&["check-lf"], &lattice.to_string());
    assert_eq!(code, 1);
    assert!(v["axiom"].as_str().unwrap().starts_with("LF"));
}

#[test]
fn pointline_round_trip() {
    let u34 = json!({"tract": {"kind": "krasner"}, "n": 4, "r": 3,
        "values": {"0,1,2": "1", "0,1,3": "1", "0,2,3": "1", "1,2,3": "1"}});
    let (code, arr) = run(&["psi"], &u34.to_string());
    assert_eq!(code, 0);
    let (code, _) = run(&["check-pl"], &arr.to_string());
    assert_eq!(code, 0);
    let (_, phi) = run(&["gp-from-pointline"], &arr.to_string());
    assert_eq!(phi["values"], u34["values"]);
}

#[test]
fn gen_random_is_deterministic() {
    let args = ["gen-random", "--prime", "7", "--rows", "3", "--cols", "5", "--seed", "11", "--count", "2"];
    let (_, a) = run(&args, "");
    let (_, b) = run(&args, "");
    assert_eq!(a, b);
    assert_eq!(a.as_array().unwrap().len(), 2);
}

#[test]
fn verify_thm_d_on_random_matrix() {
    let (_, m) = run(&["gen-random", "--rows", "3", "--cols", "5", "--seed", "2"], "");
    let (code, v) = run(&["verify-thm-d", "--seed", "5"], &m.to_string());
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["canonical_round_trip"], true);
}

#[test]
fn field_commands_reject_hyperfields() {
    let (code, _) = run(&["arr-from-matrix"], r#"{"field": {"kind": "krasner"}, "rows": [["1"]]}"#);
    assert_eq!(code, 2);
}
