use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuspcurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cuspcurve-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn parse_error_exits_two() {
    let o = run(&["analyze", "x^2 +"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parse error"));
}

#[test]
fn unknown_subcommand_exits_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn analyze_conic_is_smooth() {
    let o = run(&["--json", "analyze", "C2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["smooth"], true);
    assert_eq!(v["degree"], 2);
    assert_eq!(v["genus"], 0);
}

#[test]
fn json_output_is_deterministic() {
    let a = run(&["--json", "analyze", "quintic"]);
    let b = run(&["--json", "analyze", "quintic"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn intersect_two_lines() {
    let o = run(&["--json", "intersect", "Lx", "Ly"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bezout"], 1);
    assert_eq!(v["residual"], 0);
    assert_eq!(v["points"][0]["m"], 1);
    assert_eq!(v["points"][0]["P"], serde_json::json!([0, 0, 1]));
}

#[test]
fn empty_corpus_warns_and_succeeds() {
    let path = scratch("empty.json");
    std::fs::write(&path, "").unwrap();
    let o = run(&["verify-corpus", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("empty"));
}

#[test]
fn corrupted_expectation_names_the_entry() {
    let dump = run(&["verify-corpus", "--dump"]);
    let mut corpus: Value = serde_json::from_str(&stdout(&dump)).unwrap();
    let entry = corpus["entries"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|e| e["curve"] == "C3")
        .unwrap();
    let name = entry["name"].as_str().unwrap().to_string();
    let smooth = entry["expect"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|x| x["kind"] == "smooth")
        .unwrap();
    smooth["value"] = Value::Bool(false);
    // keep only the corrupted entry so the run stays short
    let only: Vec<Value> = corpus["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["name"] == name.as_str())
        .cloned()
        .collect();
    corpus["entries"] = Value::Array(only);
    let path = scratch("corrupt.json");
    std::fs::write(&path, serde_json::to_string(&corpus).unwrap()).unwrap();
    let o = run(&["verify-corpus", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let all = stdout(&o) + &stderr(&o);
    assert!(all.contains(&name), "{all}");
}

#[test]
fn wrong_schema_is_a_usage_error() {
    let path = scratch("schema.json");
    std::fs::write(&path, r#"{"schema": 7, "entries": []}"#).unwrap();
    let o = run(&["verify-corpus", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn transform_cubic_to_quartic() {
    let o = run(&["--json", "--params", "a=-1,b=0,c=0", "transform", "triangular:x^2", "cubic", "--exceptional", "Lz"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let quartic = run(&["--json", "--params", "a=-1,b=0,c=0", "analyze", "ams_quartic"]);
    let q: Value = serde_json::from_str(&stdout(&quartic)).unwrap();
    assert_eq!(v["strict_transform"]["curve"], q["curve"], "{v}");
    assert_eq!(v["strict_transform"]["removed"], serde_json::json!([2]));
}

#[test]
fn fiber_writes_dot_files() {
    let dir = scratch("dot");
    let o = run(&["--dot", dir.to_str().unwrap(), "fiber", "quintic", "--case", "off"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("I4*"));
    let f0 = std::fs::read_to_string(dir.join("f0.dot")).unwrap();
    assert!(f0.starts_with("graph"));
}
