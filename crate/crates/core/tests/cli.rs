//! Drives the `pentacover` binary: exit codes, schema conformance of every
//! JSON document, and byte-identical reruns.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pentacover"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schemas").join(name);
    let text = std::fs::read_to_string(&path).expect("schema file");
    let value: Value = serde_json::from_str(&text).expect("schema is json");
    jsonschema::validator_for(&value).expect("schema compiles")
}

fn assert_valid(schema_name: &str, bytes: &[u8]) -> Value {
    let doc: Value = serde_json::from_slice(bytes).expect("output is json");
    let v = schema(schema_name);
    let errors: Vec<String> = v.iter_errors(&doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema_name}: {errors:?}\n{doc:#}");
    doc
}

/// Runs twice, checks exit 0 and identical stdout, validates against the schema.
fn stable_json(args: &[&str], schema_name: &str) -> Value {
    let a = run(args);
    assert!(a.status.success(), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
    let b = run(args);
    assert_eq!(a.stdout, b.stdout, "{args:?} not deterministic");
    assert_valid(schema_name, &a.stdout)
}

#[test]
fn analyze_family_report() {
    let doc = stable_json(&["analyze", "--family", "CGD1(5^2)"], "symmetry_report.v1.json");
    assert_eq!(doc["vertices"], 50);
    let doc = stable_json(&["analyze", "--family", "CGD(p^3)", "--p", "11"], "symmetry_report.v1.json");
    assert_eq!(doc["basic"], false);
    assert_eq!(doc["witness"]["semiregular"], true);
}

#[test]
fn construct_then_analyze_file() {
    let dir = std::env::temp_dir().join(format!("pentacover-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cgd2_4.txt");
    let p = path.to_str().unwrap();
    let doc = stable_json(&["construct", "--family", "CGD(2^4)", "--out", p], "construct_output.v1.json");
    assert_eq!(doc["vertices"], 32);
    let doc = stable_json(&["analyze", "--in", p], "symmetry_report.v1.json");
    assert_eq!(doc["family"], Value::Null);
    assert_eq!(doc["aut_order"], 3840);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn classify_covers_output() {
    let doc = stable_json(&["classify-covers", "--p", "11", "--n", "2"], "cover_classes.v1.json");
    assert_eq!(doc.as_array().unwrap().len(), 2);
    let doc = stable_json(&["classify-covers", "--p", "7", "--n", "2", "--strategy", "analytic"], "cover_classes.v1.json");
    assert!(doc.as_array().unwrap().is_empty());
}

#[test]
fn census_output() {
    let doc = stable_json(&["census", "--p", "11"], "census_report.v1.json");
    assert_eq!(doc["count"], 3);
    let doc = stable_json(&["census", "--p", "7"], "census_report.v1.json");
    assert_eq!(doc["count"], 0);
}

#[test]
fn quotient_output() {
    let doc = stable_json(&["quotient", "--family", "CGD(5^4)"], "quotient_chain.v1.json");
    let steps = doc["steps"].as_array().unwrap();
    assert_eq!(steps.last().unwrap()["recognized"], "CGD(5^3)");
    let doc = stable_json(&["quotient", "--family", "K6"], "quotient_chain.v1.json");
    assert!(doc["steps"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["construct", "--family", "CGD(p^4)"],
        vec!["construct", "--family", "nonsense", "--p", "3"],
        vec!["construct", "--family", "CD(p)", "--p", "7"],
        vec!["analyze"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let doc = assert_valid("error.v1.json", out.stderr.trim_ascii_end());
        assert_eq!(doc["kind"], "usage");
    }
    // clap's own parse errors also exit 2.
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn pretty_output_is_plain_text() {
    let out = run(&["--pretty", "analyze", "--family", "K6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("aut_order") && l.ends_with("720")), "{text}");
}

#[test]
fn verify_suite_passes() {
    let out = run(&["verify", "--suite", "acceptance"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert!(text.lines().all(|l| l.starts_with("[PASS]")), "{text}");
}
