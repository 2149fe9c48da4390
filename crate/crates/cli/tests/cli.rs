// SPDX-License-Identifier: Apache-2.0

use std::process::{Command, Output};

use serde_json::Value;

fn flagbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagbound"))
        .args(args)
        .env_remove("FLAGBOUND_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = flagbound(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (out.status.code().unwrap(), v)
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn report_json_is_exact() {
    let out = flagbound(&["report", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap().trim_end(),
        r#"{"n":2,"lower_bound":"6","two_lambda":"6","chambers":"14","brute_force":"14","schlafli":"14"}"#
    );
}

#[test]
fn bound_with_random_weights() {
    let (code, v) = json(&["bound", "--n", "2", "--weights", "random:7:5"]);
    assert_eq!(code, 0);
    assert_eq!(v["values"], serde_json::json!(["3", "3", "3", "3", "3"]));
    assert_eq!(v["doubled"], serde_json::json!(["6", "6", "6", "6", "6"]));
    assert_eq!(v["p_independent"], true);
}

#[test]
fn verify_small_passes() {
    let (code, v) = json(&["verify", "--n", "1", "--level", "full"]);
    assert_eq!(code, 0);
    assert_eq!(v["all_passed"], true);
    assert!(v["checks"].as_array().unwrap().len() > 5);
}

#[test]
fn output_is_deterministic_and_thread_independent() {
    let args = [
        "lambda",
        "--n",
        "3",
        "--order-seed",
        "9",
        "--order-trials",
        "5",
        "--format",
        "json",
    ];
    let one = flagbound(&[&args[..], &["--threads", "1"]].concat());
    let two = flagbound(&[&args[..], &["--threads", "2"]].concat());
    let again = flagbound(&[&args[..], &["--threads", "1"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
    assert_eq!(one.stdout, again.stdout);
}

#[test]
fn thread_flag_overrides_environment() {
    let bin = env!("CARGO_BIN_EXE_flagbound");
    let with_flag = Command::new(bin)
        .args(["count-threshold", "--n", "2", "--threads", "1"])
        .env("FLAGBOUND_THREADS", "not-a-number")
        .output()
        .unwrap();
    assert!(with_flag.status.success(), "{}", stderr(&with_flag));
    let without = Command::new(bin)
        .args(["count-threshold", "--n", "2"])
        .env("FLAGBOUND_THREADS", "not-a-number")
        .output()
        .unwrap();
    assert!(!without.status.success());
}

#[test]
fn generated_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e3.txt");
    let p = path.to_str().unwrap();
    assert!(flagbound(&["gen-e", "--n", "3", "--out", p])
        .status
        .success());
    let (code, v) = json(&["chambers", "--input", p, "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["chambers"], "104");
    assert_eq!(v["oracle"], "104");
    let (_, v) = json(&["homology", "--input", p, "--degree", "2", "--field", "Q"]);
    assert_eq!(v["rank"], "23");
    assert_eq!(v["field"], "Q");
}

#[test]
fn report_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = flagbound(&[
        "report",
        "--n",
        "1",
        "--format",
        "json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["chambers"], "4");
    assert_eq!(v["lower_bound"], "2");
}

#[test]
fn bad_inputs_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "2 2\n1 0\n1 x\n").unwrap();
    let out = flagbound(&["chambers", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));

    let weights = dir.path().join("w.txt");
    std::fs::write(&weights, "1/2\n1/2\n1/2\n-1/4\n").unwrap();
    let out = flagbound(&["bound", "--n", "2", "--weights", weights.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("sum"), "{}", stderr(&out));

    let out = flagbound(&["count-threshold", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("guard `threshold arity`") && stderr(&out).contains('4'));

    // exactly one input source
    assert!(!flagbound(&["chambers"]).status.success());
    assert!(!flagbound(&["chambers", "--n", "2", "--input", "x"])
        .status
        .success());
}

#[test]
fn weights_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let weights = dir.path().join("w.txt");
    std::fs::write(&weights, "2\n-1/3\n-1/3\n-1/3\n").unwrap();
    let (code, v) = json(&["bound", "--n", "2", "--weights", weights.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["lower_bound"], "6");
}

#[test]
fn monte_carlo_reports_constant_samples() {
    let (code, v) = json(&["monte-carlo", "--n", "2", "--samples", "200", "--seed", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["mean"], "3");
    assert_eq!(v["constant"], true);
    assert_eq!(v["stderr_approx"], 0.0);
}
