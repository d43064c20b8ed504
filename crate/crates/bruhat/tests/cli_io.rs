//! Process-level behavior of the binary: output determinism, stream
//! separation, exit codes, and file input.

mod common;

use common::run_cli;

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = ["compare", "E9", "A8", "--max-dim", "8", "--format", "json"];
    let first = run_cli(&args);
    let second = run_cli(&args);
    assert_eq!(first.code, 0);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn timing_goes_to_stderr_not_stdout() {
    let out = run_cli(&["growth", "A2", "--max-len", "3", "--format", "json"]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("elapsed:"));
    assert!(!out.stdout.contains("elapsed"));
    serde_json::from_str::<serde_json::Value>(&out.stdout).expect("stdout is pure JSON");
}

#[test]
fn csv_series_are_exact() {
    let out = run_cli(&["growth", "A3", "--max-len", "6", "--format", "csv"]);
    assert_eq!(out.stdout, "1,3,5,6,5,3,1\n");
    let out = run_cli(&["cosets", "E9", "--max-len", "8", "--format", "csv"]);
    assert_eq!(out.stdout, "1,1,1,1,1,1,1,2,2\n");
}

#[test]
fn matrix_files_are_accepted() {
    let path = std::env::temp_dir().join(format!("gcm-{}.txt", std::process::id()));
    std::fs::write(&path, "# affine rank-2 diagram\n2\n2 -2\n-2 2\n").unwrap();
    let out = run_cli(&[
        "growth",
        path.to_str().unwrap(),
        "--max-len",
        "5",
        "--format",
        "csv",
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    // the infinite dihedral group has two elements of each positive length
    assert_eq!(out.stdout, "1,2,2,2,2,2\n");
}

#[test]
fn domain_failures_exit_one_and_keep_stdout_empty() {
    let out = run_cli(&["growth", "E9", "--max-len", "9", "--budget", "10"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("budget"));

    let out = run_cli(&["growth", "/no/such/diagram.txt"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_failures_exit_two() {
    // clap rejects the unknown subcommand
    let out = run_cli(&["frobnicate"]);
    assert_eq!(out.code, 2);
    // 0 is not a valid 1-based node
    let out = run_cli(&["cosets", "A3", "--sub", "0-2"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    // the E-series pipeline has a rank floor
    let out = run_cli(&["homotopy-en", "--n", "7"]);
    assert_eq!(out.code, 2);
    // unknown tower space syntax
    let out = run_cli(&["tower", "U(3)"]);
    assert_eq!(out.code, 2);
}

#[test]
fn help_lists_every_subcommand() {
    let out = run_cli(&["--help"]);
    assert_eq!(out.code, 0);
    for name in ["growth", "cosets", "cells", "compare", "homotopy-en", "tower", "bott"] {
        assert!(out.stdout.contains(name), "help is missing {name}");
    }
}

#[test]
fn compare_defaults_drop_the_last_node_on_both_sides() {
    let out = run_cli(&["compare", "E9", "A8", "--format", "json"]);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["payload"]["left"]["parabolic"], serde_json::json!([1, 2, 3, 4, 5, 6, 7, 8]));
    assert_eq!(report["payload"]["right"]["parabolic"], serde_json::json!([1, 2, 3, 4, 5, 6, 7]));
    assert_eq!(report["payload"]["verdict"]["diverge_at"], 7);
    assert_eq!(report["payload"]["agreement_depth"], 6);
}

#[test]
fn explicit_subsets_reach_both_tables() {
    let out = run_cli(&[
        "compare", "A3", "A3", "--subs", "1,2", "2,3", "--max-dim", "4", "--format", "json",
    ]);
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["payload"]["left"]["parabolic"], serde_json::json!([1, 2]));
    assert_eq!(report["payload"]["right"]["parabolic"], serde_json::json!([2, 3]));
    assert_eq!(report["payload"]["verdict"]["match_through"], 4);
}

#[test]
fn homotopy_en_table_interleaves_profile_evidence_and_trace() {
    let out = run_cli(&["homotopy-en", "--n", "9"]);
    assert_eq!(out.code, 0);
    let positions: Vec<usize> = ["homotopy of K(E9)", "evidence", "trace", "DEGREE 0:"]
        .iter()
        .map(|needle| out.stdout.find(needle).unwrap_or_else(|| panic!("missing {needle}")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "sections out of order");
}

#[test]
fn cells_table_shows_used_generators() {
    let out = run_cli(&["cells", "E9", "--max-dim", "3"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("used"));
    assert!(out.stdout.contains("{8-9}"));
}

#[test]
fn schema_and_provenance_are_present_in_every_json_report() {
    for args in [
        vec!["growth", "A2", "--format", "json"],
        vec!["bott", "--max-k", "3", "--format", "json"],
        vec!["tower", "SO(8)", "--max-k", "5", "--format", "json"],
    ] {
        let out = run_cli(&args);
        assert_eq!(out.code, 0, "{args:?} failed: {}", out.stderr);
        let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(report["schema"], 1);
        assert_eq!(report["provenance"]["tool"], "bruhat");
        assert!(report["provenance"]["args"].as_array().is_some());
    }
}
