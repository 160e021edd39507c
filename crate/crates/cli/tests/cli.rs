//! End-to-end runs of the `fracnet` binary against the bundled documents.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> String {
    root().join("../../data").join(name).display().to_string()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(root().join("tests/golden").join(name)).unwrap()
}

fn fracnet(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fracnet"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = fracnet(args);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn net_intervals_report_matches_golden() {
    let (code, out) = fracnet(&[
        "net-intervals",
        &data("thirds_ninths_1d.json"),
        "--alpha",
        "1/2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("thirds_ninths_half.json"));
}

#[test]
fn graph_table_and_dot_match_golden() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("golden.dot");
    let (code, out) = fracnet(&[
        "graph",
        &data("overlapping_center_2d.json"),
        "--essential",
        "--dot",
        dot.to_str().unwrap(),
        "--output",
        "csv",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("center_overlap_edges.csv"));
    assert_eq!(
        std::fs::read_to_string(&dot).unwrap(),
        golden("center_overlap.dot")
    );
}

#[test]
fn validate_reports_boundary_maps() {
    let (code, v) = json(&["validate", &data("overlapping_center_2d.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["full_support"], true);
    assert_eq!(
        v["results"]["boundary_maps"],
        serde_json::json!([1, 2, 3, 4])
    );
    assert_eq!(v["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn malformed_document_names_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("decimal.json");
    std::fs::write(
        &path,
        r#"{"dim": 1, "maps": [{"ratio": "0.5", "translation": ["0"]}]}"#,
    )
    .unwrap();
    let (code, v) = json(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["field"], "maps[0].ratio");
}

#[test]
fn probabilities_must_sum_to_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sum.json");
    std::fs::write(
        &path,
        r#"{"dim": 1, "maps": [{"ratio": "1/2", "translation": ["-1/4"]},
            {"ratio": "1/2", "translation": ["1/4"]}], "probabilities": ["1/2", "1/3"]}"#,
    )
    .unwrap();
    let (code, v) = json(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(v["error"]["message"].as_str().unwrap().contains("Σp_i=1"));
}

#[test]
fn level_one_of_center_overlap() {
    let (code, v) = json(&[
        "net-intervals",
        &data("overlapping_center_2d.json"),
        "--level",
        "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["count"], 8);
    assert_eq!(v["results"]["distinct_types"], 6);
}

#[test]
fn checks_on_center_overlap_and_tiling() {
    let (code, v) = json(&["check", &data("overlapping_center_2d.json"), "--fnc"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["fnc"]["status"], "FNC_detected");
    assert_eq!(v["results"]["fnc"]["types"], 9);

    let (code, v) = json(&["check", &data("corner_tiling_2d.json"), "--gftc"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["gftc"]["size"], 1);

    let (code, _) = json(&[
        "check",
        &data("rotated_tiling_2d.json"),
        "--fnc",
        "--max-types",
        "1",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn graph_only_mode_drops_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("plain.dot");
    let (code, v) = json(&[
        "graph",
        &data("thirds_ninths_1d.json"),
        "--no-weights",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["weighted"], false);
    assert!(!std::fs::read_to_string(&dot).unwrap().contains("label=\"["));
}

#[test]
fn local_dimensions_from_the_command_line() {
    let (code, v) = json(&[
        "localdim",
        &data("lebesgue_1d.json"),
        "--point",
        "1/3",
        "--depth",
        "10",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["certificate"]["exact"], "1");

    let (code, v) = json(&[
        "localdim",
        &data("overlapping_center_2d.json"),
        "--path",
        "A,1,(1)",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["certificate"]["exact"], "3");
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["check", &data("overlapping_center_2d.json")];
    let (_, a) = fracnet(&args);
    let (_, b) = fracnet(&args);
    assert_eq!(a, b);
}
