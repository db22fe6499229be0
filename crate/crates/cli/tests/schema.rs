use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn schema() -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/report.schema.json");
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn json(args: &[&str]) -> Value {
    let out = Command::new(env!("CARGO_BIN_EXE_foliate")).args(args).output().unwrap();
    serde_json::from_slice(&out.stdout).unwrap()
}

fn assert_valid(v: &Value, what: &str) {
    let errors: Vec<String> = schema().iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{what}: {errors:#?}");
}

#[test]
fn every_command_on_the_whole_corpus_matches_the_schema() {
    for cmd in [&["validate"][..], &["cohomology", "--reps"], &["battery", "--all"]] {
        let v = json(&[cmd, &["--json", "--model", "all"]].concat());
        assert!(v.as_array().is_some_and(|a| a.len() == foliate::corpus::ENTRIES.len()));
        assert_valid(&v, &cmd.join(" "));
    }
}

#[test]
fn single_and_failure_reports_match_the_schema() {
    assert_valid(&json(&["battery", "--json", "--model", "kodaira-thurston"]), "single report");
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures/bad-jacobi.model");
    assert_valid(&json(&["validate", "--json", fixture.to_str().unwrap()]), "Jacobi failure");
    assert_valid(&json(&["cohomology", "--json", "/nonexistent.model"]), "unreadable input");
}

#[test]
fn the_schema_rejects_malformed_reports() {
    let mut v = json(&["validate", "--json", "--model", "abelian-torus-2"]);
    v["verdicts"]["x"] = Value::from("maybe");
    assert!(!schema().is_valid(&v));
}
