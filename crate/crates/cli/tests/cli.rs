use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const GOLDEN_TABLE: &str = include_str!("../../core/tests/golden/table1.txt");
const SCHEMA: &str = include_str!("../../../docs/schema.json");

fn agrees(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agrees")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn succeed(args: &[&str]) -> String {
    let out = agrees(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&succeed(args)).expect("valid JSON")
}

/// Validates `value` against `$defs/<name>` in the shipped schema.
fn assert_schema(name: &str, value: &Value) {
    let mut schema: Value = serde_json::from_str(SCHEMA).unwrap();
    assert!(schema["$defs"].get(name).is_some(), "no schema for {name}");
    schema["$ref"] = Value::String(format!("#/$defs/{name}"));
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator.iter_errors(value).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn s(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn table_reproduces_the_golden_file() {
    assert_eq!(succeed(&["table", "10", "9"]), GOLDEN_TABLE);
    assert_eq!(succeed(&["table", "--dmax", "10", "--lmax", "9", "--format", "ascii"]), GOLDEN_TABLE);
}

#[test]
fn table_renderings_agree() {
    let ascii = succeed(&["table", "12", "11"]);
    let csv = succeed(&["table", "12", "11", "--format", "csv"]);
    let cells = json(&["table", "12", "11", "--format", "json"]);
    assert_schema("table", &cells);
    let cells = cells.as_array().unwrap();
    assert_eq!(cells.len(), 11 * 11);

    let mut rows = csv.lines();
    assert_eq!(rows.next(), Some("d,ell,label"));
    let grid: Vec<Vec<&str>> = ascii
        .lines()
        .skip(2)
        .map(|l| l.split('|').skip(1).map(str::trim).collect())
        .collect();
    for (cell, row) in cells.iter().zip(rows) {
        let (d, ell, label) = (cell["d"].as_u64().unwrap(), cell["ell"].as_u64().unwrap(), cell["label"].as_str().unwrap());
        assert_eq!(row, format!("{d},{ell},{label}"));
        assert_eq!(grid[(d - 2) as usize][(ell - 1) as usize], label);
    }
}

#[test]
fn table_single_cell_and_bounds() {
    let cells = json(&["table", "2", "1", "--format", "json"]);
    assert_eq!(cells.as_array().unwrap().len(), 1);
    assert_eq!(cells[0]["label"], "Gor");
    let out = agrees(&["table", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("d_max >= 2"));
}

#[test]
fn lemma_ineq_sweeps() {
    assert!(succeed(&["lemma-ineq", "--dmax", "30", "--lmax", "10"]).contains("gap >= 0 everywhere"));
    let report = succeed(&["lemma-ineq", "--dmax", "5", "--lmax", "2", "--report-gaps"]);
    let gaps: Vec<&str> = report.lines().take(3).collect();
    assert_eq!(gaps, ["gap(3,2)=0", "gap(4,2)=4", "gap(5,2)=0"]);
    let value = json(&["lemma-ineq", "--dmax", "6", "--lmax", "3", "--report-gaps", "--format", "json"]);
    assert_schema("lemmaIneq", &value);
    assert_eq!(value["holds"], true);
    assert_eq!((value["gaps"][2]["d"].as_u64(), value["gaps"][2]["gap"].as_str()), (Some(4), Some("4")));
    assert_eq!(agrees(&["lemma-ineq", "--dmax", "2", "--lmax", "2"]).status.code(), Some(2));
    assert_eq!(agrees(&["lemma-ineq", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn good_check_examples() {
    let dir = TempDir::new().unwrap();
    let m2 = write(&dir, "m2.txt", "# m^2 in three variables\n2 0 0\n1 1 0\n1 0 1\n0 2 0\n0 1 1\n0 0 2\n");
    let q3 = write(&dir, "q3.txt", "2 0 0\n0 2 0\n0 0 2\n");
    let report = json(&["good-check", "--dim", "3", "--ideal", s(&m2), "--reduction", s(&q3)]);
    assert_schema("goodCheck", &report);
    assert_eq!(report["good"], true);
    assert_eq!(report["witness"], Value::Null);

    let m3 = write(&dir, "m3.txt", "3 0\n2 1\n1 2\n0 3\n");
    let q2 = write(&dir, "q2.txt", "\n3 0\n\n0 3\n");
    let report = json(&["good-check", "--ideal", s(&m3), "--reduction", s(&q2)]);
    assert_schema("goodCheck", &report);
    assert_eq!(report["good"], false);
    assert_eq!(report["colon_result"]["gens"], serde_json::json!([[2, 0], [1, 1], [0, 2]]));
    assert_eq!(report["witness"]["kind"], "not-colon-closed");

    let ascii = succeed(&["good-check", "--ideal", s(&m3), "--reduction", s(&q2), "--format", "ascii"]);
    assert!(ascii.contains("good: false"));
}

#[test]
fn good_check_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let ok = write(&dir, "ok.txt", "2 0\n0 2\n");
    let bad = write(&dir, "bad.txt", "# header\n1 0\n0 -1\n");
    let out = agrees(&["good-check", "--ideal", s(&bad), "--reduction", s(&ok)]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(err.contains("bad.txt:3") && err.contains("invalid exponent '-1'"), "{err}");

    let wide = write(&dir, "wide.txt", "1 0 0\n");
    let out = agrees(&["good-check", "--ideal", s(&ok), "--reduction", s(&wide)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("wide.txt:1: expected 2 exponents, found 3"));

    let m = write(&dir, "m.txt", "1 0\n0 1\n");
    let out = agrees(&["good-check", "--ideal", s(&ok), "--reduction", s(&m)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("precondition failed"));

    let out = agrees(&["good-check", "--ideal", "/nonexistent/ideal.txt", "--reduction", s(&ok)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/nonexistent/ideal.txt"));
}

#[test]
fn classify_and_ladder() {
    let cell = json(&["classify", "5", "2"]);
    assert_schema("classify", &cell);
    assert_eq!(cell["label"], "AGL");
    assert_eq!(json(&["classify", "--d", "6", "--ell", "4"])["label"], "X");
    assert_eq!(agrees(&["classify", "1", "1"]).status.code(), Some(2));
    assert_eq!(agrees(&["classify", "5"]).status.code(), Some(2));

    let report = json(&["ladder", "--d", "9", "--ell", "4"]);
    assert_schema("ladder", &report);
    assert_eq!(report["mu_K"], "2");
    assert_eq!(report["obstruction"]["e_bound"], "262144");
    let report = json(&["ladder", "--d", "6", "--ell", "4"]);
    assert_schema("ladder", &report);
    assert!(report.get("obstruction").is_none());
}

#[test]
fn certificate_output() {
    let cert = json(&["certificate", "--dim", "2", "--ell", "2"]);
    assert_schema("certificate", &cert);
    let text = serde_json::to_string(&cert).unwrap();
    assert!(text.starts_with(r#"{"ell":2,"f":"x","g":"x^2","h":"y""#), "{text}");
    assert_eq!(cert["identities"], serde_json::json!({"A": true, "B": true}));
    assert_eq!(cert["containment"].as_array().unwrap().len(), 11);

    let cert = json(&["certificate", "--ell", "5", "--nmax", "3"]);
    assert_eq!((cert["h"].as_str(), cert["degrees_checked"].as_u64()), (Some("y^4"), Some(3)));
    assert_eq!(agrees(&["certificate", "--dim", "3", "--ell", "2"]).status.code(), Some(2));
    let out = agrees(&["certificate", "--ell", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("parameter ideal"));
}

#[test]
fn veronese_output() {
    let rep = json(&["veronese", "--r", "2", "--ell", "1"]);
    assert_schema("veronese", &rep);
    assert_eq!(rep["identities"], serde_json::json!({"A": true, "B": true}));
    let rep = json(&["veronese", "--r", "4", "--ell", "3"]);
    assert_schema("veronese", &rep);
    assert_eq!((rep["precondition"].as_bool(), rep["precondition_variant"].as_bool()), (Some(true), Some(false)));
    assert_eq!(agrees(&["veronese", "--r", "1", "--ell", "1"]).status.code(), Some(2));
    assert_eq!(agrees(&["veronese", "--r", "3", "--ell", "0"]).status.code(), Some(2));
}

#[test]
fn colon_output() {
    let dir = TempDir::new().unwrap();
    let q = write(&dir, "q.txt", "3 0\n0 3\n");
    let m3 = write(&dir, "m3.txt", "3 0\n2 1\n1 2\n0 3\n");
    let value = json(&["colon", s(&q), s(&m3)]);
    assert_schema("colon", &value);
    assert_eq!(value["display"], "(x^2, x*y, y^2)");
    let text = succeed(&["colon", s(&q), s(&m3), "--format", "ascii"]);
    assert!(text.ends_with("2 0\n1 1\n0 2\n"), "{text}");

    let zero = write(&dir, "zero.txt", "# nothing\n");
    let out = agrees(&["colon", s(&q), s(&zero)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("zero ideal"));
}

#[test]
fn oracle_output() {
    let value = json(&["oracle", "--seed", "7", "--trials", "60"]);
    assert_schema("oracle", &value);
    assert_eq!(value["mismatches"], serde_json::json!([]));
}

#[test]
fn usage_errors() {
    assert_eq!(agrees(&["--help"]).status.code(), Some(0));
    assert_eq!(agrees(&[]).status.code(), Some(2));
    assert_eq!(agrees(&["table", "--format", "yaml"]).status.code(), Some(2));
    assert_eq!(agrees(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn schema_rejects_malformed_output() {
    let mut schema: Value = serde_json::from_str(SCHEMA).unwrap();
    schema["$ref"] = Value::String("#/$defs/classify".into());
    let validator = jsonschema::validator_for(&schema).unwrap();
    let mut cell = json(&["classify", "7", "3"]);
    assert!(validator.is_valid(&cell));
    cell["label"] = Value::String("Y".into());
    assert!(!validator.is_valid(&cell));
    cell["label"] = Value::String("AGL".into());
    cell["evidence"]["mu_K"] = serde_json::json!(2);
    assert!(!validator.is_valid(&cell));
}
