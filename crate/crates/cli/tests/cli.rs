use std::fs;
use std::process::Command;

use serde_json::Value;

fn h4verify(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_h4verify"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn verify_facts_writes_a_passing_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = h4verify(&[
        "verify",
        "--only",
        "facts/*",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let checks = report.as_array().unwrap();
    assert_eq!(checks.len(), 10);
    let ids: Vec<&str> = checks.iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn fact5_reports_ten_partitions() {
    let out = h4verify(&["verify", "--only", "facts/fact5"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    let obs = report[0]["observations"].as_array().unwrap();
    let count = obs
        .iter()
        .find(|o| o["name"] == "partitions into five disjoint 24-cells")
        .unwrap();
    assert_eq!(count["observed"], 10);
    assert_eq!(count["origin"], "published");
}

#[test]
fn unknown_selector_is_a_usage_error() {
    let out = h4verify(&["verify", "--only", "nonexistent"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown check id"));
}

#[test]
fn unknown_dump_object_is_a_usage_error() {
    assert_eq!(h4verify(&["dump", "cube"]).status.code(), Some(2));
}

#[test]
fn unwritable_report_is_an_io_error() {
    let out = h4verify(&[
        "verify",
        "--only",
        "facts/fact1",
        "--report",
        "/nonexistent-dir/r.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_contain_no_floats() {
    fn no_floats(v: &Value) -> bool {
        match v {
            Value::Number(n) => n.is_i64() || n.is_u64(),
            Value::Array(a) => a.iter().all(no_floats),
            Value::Object(o) => o.values().all(no_floats),
            _ => true,
        }
    }
    let out = h4verify(&["verify", "--only", "s6/*"]);
    assert_eq!(out.status.code(), Some(0));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(no_floats(&report));
}

#[test]
fn label_dump_lists_sixty_labels() {
    let out = h4verify(&["dump", "labels"]);
    assert_eq!(out.status.code(), Some(0));
    let labels: Value = serde_json::from_slice(&out.stdout).unwrap();
    let labels = labels.as_array().unwrap();
    assert_eq!(labels.len(), 60);
    assert!(labels.iter().any(
        |l| l["label"] == "(16)(27)(38)(49)(5X)" && l["coords"][0] == serde_json::json!([2, 0])
    ));
}

#[test]
fn line_dump_is_stable() {
    let a = h4verify(&["--threads", "1", "dump", "lines"]);
    let b = h4verify(&["--threads", "3", "dump", "lines"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["lines"].as_array().unwrap().len(), 357);
    assert_eq!(v["points"].as_array().unwrap().len(), 85);
}
