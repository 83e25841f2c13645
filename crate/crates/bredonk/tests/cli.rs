//! End-to-end checks of the command-line front end: exit codes, output
//! determinism, the JSON and matrix-dump formats, and the error paths.

mod common;

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use bredonk::dataset::DatasetFile;
use common::sl3z;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bredonk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bredonk-test-{tag}-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn validate_builtins() {
    let out = run(&["validate", "--builtin", "sl3z"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("cells: 19"));
    assert!(text.contains("validation: ok"));

    let out = run(&["validate", "--builtin", "c2point"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("cells: 1"));

    let out = run(&["validate", "--builtin", "gl3z"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("product"));
}

#[test]
fn point_model_homology_output() {
    let out = run(&["homology", "--builtin", "c2point"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("H0 = Z^2"));
    assert!(text.contains("euler characteristic: 2"));
}

#[test]
fn char_table_output_for_inline_generators() {
    let out = run(&["char-table", "--gens", "-1,0,0,0,0,-1,0,-1,0;0,0,1,0,1,0,-1,0,0"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order: 24"));
    assert!(text.contains("classes: 5"));
    assert!(text.contains(r#"degrees: ["1", "1", "2", "3", "3"]"#));

    let out = run(&["char-table", "--gens", "-1,0,0,0,0,-1,0,-1,0"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order: 2"));
    assert!(text.contains("chi1: 1  -1") || text.contains("chi2: 1  -1"));
    assert!(text.contains("chi1: 1  1") || text.contains("chi2: 1  1"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["homology", "--builtin", "sl3z"],
        vec!["k-homology", "--builtin", "sl3z", "--json"],
        vec!["kunneth", "--builtin", "sl3z", "--builtin", "c2point"],
        vec!["char-table", "--gens", "-1,0,0,0,0,-1,0,-1,0;0,0,1,0,1,0,-1,0,0"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
    }
}

#[test]
fn expectation_check_drives_exit_code() {
    let ok = run(&["homology", "--builtin", "sl3z", "--expect-h0-rank", "8"]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("expected H0 rank 8: ok"));

    let bad = run(&["homology", "--builtin", "sl3z", "--expect-h0-rank", "7"]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("MISMATCH"));
}

#[test]
fn tampered_witness_exits_2_with_location() {
    // replace the e5 -> v4 witness with the identity
    let mut file = DatasetFile::from_complex(&sl3z());
    for b in &mut file.boundaries {
        if b.cell == "e5" {
            for t in &mut b.terms {
                t.g = None;
            }
        }
    }
    let dir = temp_dir("tamper");
    let path = dir.join("broken.json");
    fs::write(&path, file.to_json()).unwrap();

    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = stderr(&out);
    assert!(err.contains("e5"), "diagnostic names the cell: {err}");
    assert!(err.contains("does not embed"), "diagnostic explains: {err}");
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn parse_and_io_errors_exit_3() {
    let out = run(&["validate", "/nonexistent/nowhere.json"]);
    assert_eq!(code(&out), 3);

    let dir = temp_dir("badjson");
    let path = dir.join("bad.json");
    fs::write(&path, "{ not json").unwrap();
    let out = run(&["homology", path.to_str().unwrap()]);
    assert_eq!(code(&out), 3);

    let out = run(&["validate", "--builtin", "nope"]);
    assert_eq!(code(&out), 3);

    let out = run(&["kunneth", "--builtin", "sl3z"]);
    assert_eq!(code(&out), 3, "kunneth needs two datasets");
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn dataset_files_round_trip_through_the_cli() {
    let file = DatasetFile::from_complex(&sl3z());
    let dir = temp_dir("roundtrip");
    let path = dir.join("sl3z-copy.json");
    fs::write(&path, file.to_json()).unwrap();

    let from_file = run(&["homology", path.to_str().unwrap()]);
    let from_builtin = run(&["homology", "--builtin", "sl3z"]);
    assert_eq!(code(&from_file), 0);
    assert_eq!(from_file.stdout, from_builtin.stdout);
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn matrix_dump_format() {
    let dir = temp_dir("dump");
    let out = run(&[
        "homology",
        "--builtin",
        "sl3z",
        "--dump-matrices",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);

    // psi_d maps degree-d to degree-(d-1) coordinates: rows x cols =
    // rank(d-1) x rank(d)
    let expected_headers = [("psi1.txt", "26 28"), ("psi2.txt", "28 11"), ("psi3.txt", "11 1")];
    for (name, header) in expected_headers {
        let text = fs::read_to_string(dir.join(name)).unwrap_or_else(|_| panic!("{name} written"));
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), header, "{name} header");
        let rows: usize = header.split(' ').next().unwrap().parse().unwrap();
        let cols: usize = header.split(' ').nth(1).unwrap().parse().unwrap();
        let body: Vec<&str> = lines.collect();
        assert_eq!(body.len(), rows, "{name} row count");
        for row in body {
            assert_eq!(row.split(' ').count(), cols, "{name} column count");
            for tok in row.split(' ') {
                tok.parse::<i64>().unwrap_or_else(|_| panic!("{name}: integer entries"));
            }
        }
    }
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn kunneth_with_path_and_builtin() {
    let file = DatasetFile::from_complex(&common::c2point());
    let dir = temp_dir("kunneth");
    let path = dir.join("c2.json");
    fs::write(&path, file.to_json()).unwrap();

    // tensoring with the trivial point leaves homology unchanged
    let out = run(&["kunneth", path.to_str().unwrap(), "--builtin", "trivialpoint"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("H0 = Z^2"));

    let out = run(&["kunneth", "--builtin", "c2point", "--builtin", "c2point"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("H0 = Z^4"));
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn engineered_h2_reports_indeterminate() {
    // one free 2-cell orbit and nothing else: H2 = Z
    let dataset = r#"{
        "name": "h2bump",
        "matrix_dim": 1,
        "cells": [ { "id": "c", "dim": 2, "stabilizer_gens": [[1]] } ],
        "boundaries": []
    }"#;
    let dir = temp_dir("h2");
    let path = dir.join("h2.json");
    fs::write(&path, dataset).unwrap();

    let out = run(&["k-homology", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(
        text.contains("k-theory status: indeterminate (H2 nonzero)"),
        "got: {text}"
    );
    assert!(!text.contains("K0 ="), "K groups stay unset: {text}");
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn char_table_from_file_and_json_output() {
    let dir = temp_dir("chartab");
    let path = dir.join("d4.json");
    fs::write(
        &path,
        r#"{ "matrix_dim": 3, "generators": [[0,-1,0,-1,0,0,0,0,-1], [-1,0,0,0,1,0,0,-1,-1]] }"#,
    )
    .unwrap();

    let out = run(&["char-table", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order: 8"));
    assert!(text.contains("classes: 5"));

    let out = run(&["char-table", path.to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["order"], 8);
    assert_eq!(v["degrees"].as_array().unwrap().len(), 5);
    fs::remove_dir_all(&dir).ok();
}

#[test]
fn char_table_of_infinite_group_fails_cleanly() {
    let out = run(&["char-table", "--gens", "1,1,0,1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("too large or infinite"));
}

#[test]
fn json_reports_parse() {
    let out = run(&["homology", "--builtin", "sl3z", "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(v["dataset"], "sl3z");
    assert_eq!(v["chain_ranks"], serde_json::json!([26, 28, 11, 1]));
    assert_eq!(v["homology"], serde_json::json!(["Z^8", "0", "0", "0"]));
    assert_eq!(v["euler_characteristic"], 8);
}
