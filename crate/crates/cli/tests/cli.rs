use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_s3bundle");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["check-form", "--n", "10", "--lambda", "9"], 0),
        (&["check-form", "--n", "5", "--lambda", "2"], 1),
        (&["check-form", "--n", "10", "--lambda", "5"], 1),
        (&["check-form", "--n", "0", "--lambda", "1"], 2),
        (&["check-form", "--n", "10"], 2),
        (&["classify", "--n", "12"], 0),
        (&["classify", "--n", "-3"], 2),
        (&["match", "--n", "10", "--lambda", "1", "--beta", "2"], 0),
        (&["match", "--n", "12", "--lambda", "1", "--beta", "2"], 1),
        (&["match", "--n", "10", "--lambda", "1", "--beta", "3"], 2),
        (&["decide", "--n", "7", "--lambda", "3"], 0),
        (&["decide", "--n", "10", "--lambda", "9"], 1),
        (&["decide", "--n", "10", "--lambda", "9", "--manifold"], 0),
        (&["decide", "--n", "9", "--lambda", "2", "--theta", "nontrivial"], 2),
        (&["hopf-witness", "--n", "10", "--lambda", "9"], 0),
        (&["hopf-witness", "--n", "5", "--lambda", "2"], 1),
        (&["berger"], 0),
        (&["table", "--max-n", "0"], 2),
        (&["frobnicate"], 2),
    ];
    for (args, expected) in cases {
        assert_eq!(code(args), *expected, "{args:?}");
    }
}

#[test]
fn envelope_shape() {
    let v = json(&["hopf-witness", "--n", "10", "--lambda", "9", "--format", "json"]);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], "hopf-witness");
    assert_eq!(v["inputs"]["n"], 10);
    assert_eq!(v["result"]["witness"]["m"], 7);
    assert_eq!(v["result"]["witness"]["k"], -44);
    assert!(v["provenance"].as_array().is_some_and(|p| !p.is_empty()));
}

#[test]
fn big_integers_are_exact_in_json() {
    let n = "340282366920938463463374607431768211456"; // 2^128
    let out = run(&["check-form", "--n", n, "--lambda", "-1", "--format", "json"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains(n));
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["inputs"]["n"].to_string(), n);
    assert_eq!(v["result"]["standard"], true);
}

#[test]
fn errors_go_to_stderr() {
    let out = run(&["check-form", "--n", "0", "--lambda", "1", "--format", "json"]);
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());
}

#[test]
fn table_csv_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = run(&["table", "--max-n", "12", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(
        headers,
        ["g", "homotopy_type_count", "n", "pl_regime", "square_class_count", "theorem4_applies"]
    );
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 12);
    assert_eq!(&rows[11][0], "12");
    assert_eq!(&rows[11][1], "7");
}

#[test]
fn table_json_lines() {
    let out = run(&["table", "--max-n", "30"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 30);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r["n"], i as u64 + 1);
    }
    assert_eq!(rows[26]["theorem4_applies"], true); // 27 = 3^3
    assert_eq!(rows[24]["theorem4_applies"], false); // 25 = 5^2
}

#[test]
fn table_rejects_unwritable_destination() {
    assert_eq!(code(&["table", "--max-n", "3", "--output", "/nonexistent/dir/t.csv"]), 2);
}
