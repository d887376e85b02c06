use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bettifv")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

const C6: &str = "x1 x2\nx2 x3\nx3 x4\nx4 x5\nx5 x6\nx6 x1\n";
const EXAMPLE: &str = "y8 y6\ny6 y3\ny3 y1\ny7 y4\ny4 y2\ny8 y7\ny6 y7\ny6 y4\ny4 y5\ny3 y4\ny3 y2\ny1 y2\ny2 y5\n";

#[test]
fn six_cycle_by_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6.txt", C6);
    let out = run(&["betti", "graph", &c6, "--method=hochster"]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["results"]["betti"], serde_json::json!([6, 9, 6, 2]));
    for key in ["command", "inputs", "results", "checks"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn six_cycle_is_not_chordal() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(dir.path(), "c6.txt", C6);
    assert_eq!(run(&["betti", "graph", &c6, "--method=hvt"]).status.code(), Some(1));
    assert_eq!(run(&["realize", "graph", &c6]).status.code(), Some(1));
}

#[test]
fn fvector_check() {
    let out = run(&["fvector", "check", "6,9,6,2"]);
    assert!(out.status.success());
    let results = &json(&out)["results"];
    assert_eq!(results["kk_valid"], Value::Bool(false));
    assert_eq!(results["kalai"], Value::Null);
    let out = run(&["fvector", "check", "7,12,7,1"]);
    assert_eq!(json(&out)["results"]["kalai"], serde_json::json!([6, 6, 1]));
}

#[test]
fn realize_worked_example_writes_facets() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", EXAMPLE);
    let facets = dir.path().join("facets.txt");
    let out = run(&["realize", "graph", &g, "--out", facets.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["results"]["f_vector"], serde_json::json!([13, 36, 47, 34, 13, 2]));
    assert!(report["checks"].as_object().unwrap().values().all(|v| v == &Value::Bool(true)));
    let text = std::fs::read_to_string(&facets).unwrap();
    assert_eq!(text.lines().count(), report["results"]["facets"].as_array().unwrap().len());
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", EXAMPLE);
    let a = run(&["betti", "graph", &g, "--timing"]);
    let b = run(&["betti", "graph", &g, "--timing", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stderr).contains("elapsed"));
    assert!(!String::from_utf8_lossy(&a.stdout).contains("elapsed"));
}

#[test]
fn ideals_and_stable() {
    let dir = tempfile::tempdir().unwrap();
    let m2 = write(dir.path(), "m2.txt", "x1^2, x1*x2, x2^2\n");
    let out = run(&["betti", "ideal", &m2]);
    assert_eq!(json(&out)["results"]["betti"], serde_json::json!([3, 2]));
    let out = run(&["stable", "betti", &m2]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["results"]["betti"], serde_json::json!([3, 2]));
    assert_eq!(report["checks"]["eliahou_kervaire_equals_oracle"], Value::Bool(true));
    let not_stable = write(dir.path(), "ns.txt", "x2\n");
    assert_eq!(run(&["stable", "betti", &not_stable]).status.code(), Some(1));
    let bad = write(dir.path(), "bad.txt", "y1*y2\n");
    assert_eq!(run(&["betti", "ideal", &bad]).status.code(), Some(2));
}

#[test]
fn componentwise_linear() {
    let out = run(&["realize", "betti-cwl", "3,3,1"]);
    assert!(out.status.success());
    let report = json(&out);
    assert_eq!(report["results"]["f_vector"], serde_json::json!([3, 3, 1]));
    assert_eq!(report["checks"]["acyclic"], Value::Bool(true));
    assert_eq!(run(&["realize", "betti-cwl", "6,9,6,2"]).status.code(), Some(1));
}

#[test]
fn cyclic_commands() {
    let out = run(&["cyclic", "betti", "7", "2"]);
    assert_eq!(json(&out)["results"]["betti"], serde_json::json!([14, 35, 35, 14, 1]));
    let out = run(&["cyclic", "verify", "8", "4"]);
    assert!(out.status.success());
    let out = run(&["cyclic", "realize", "9", "4"]);
    assert!(out.status.success());
    assert_eq!(run(&["cyclic", "betti", "7", "3"]).status.code(), Some(1));
}

#[test]
fn gorenstein_commands() {
    let out = run(&["gorenstein", "shape", "3", "6"]);
    assert_eq!(json(&out)["results"]["betti"], serde_json::json!([7, 12, 7, 1]));
    let out = run(&["gorenstein", "admissible", "5", "3"]);
    assert_eq!(json(&out)["results"]["admissible"], Value::Bool(false));
    let out = run(&["gorenstein", "witness", "5", "3"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["results"]["betti"], serde_json::json!([6, 10, 6, 1]));
}

#[test]
fn nearly_scarf_of_a_path() {
    let dir = tempfile::tempdir().unwrap();
    let omega = write(dir.path(), "omega.txt", "a b\nb c\n");
    let out = run(&["nearly-scarf", &omega, "--field", "F2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["results"]["betti"], serde_json::json!([3, 2]));
    assert_eq!(report["checks"]["formula_equals_oracle"], Value::Bool(true));
}

#[test]
fn verify_chordal() {
    let out = run(&["verify", "chordal", "--max-vertices", "7", "--seed", "7"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["checks"]["chordal"], Value::Bool(true));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["betti", "graph", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["betti", "graph", "x", "--field", "F4"]).status.code(), Some(2));
}
