//! End-to-end command tests against the built binary: exit codes, JSON
//! shapes, determinism, and the file-vs-inline input rules.

use std::io::Write;
use std::process::{Command, Output};

fn postchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_postchar"))
        .args(args)
        .env_remove("POSTCHAR_SEED")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn invariants_of_the_degree_14_curve() {
    let out = postchar(&["invariants", "-c", "-1,-1,-1,6,-1,-1,-1"]);
    let v = stdout_json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["degree"], 14);
    assert_eq!(v["genus"], 15);
    assert_eq!(v["m"], 2);
    assert_eq!(v["delta"], serde_json::json!([-1, -1, -1, 3]));
}

#[test]
fn p3_invariants() {
    let out = postchar(&["invariants", "-c", "-1,-1,-1,3", "--ambient", "3"]);
    let v = stdout_json(&out);
    assert_eq!(v["degree"], 6);
    assert_eq!(v["genus"], 3);
}

#[test]
fn chain_of_the_line_is_empty_with_exit_zero() {
    let out = postchar(&["chain", "-c", "-1,2,-1"]);
    let v = stdout_json(&out);
    assert_eq!(v["steps"], serde_json::json!([]));
    assert_eq!(v["total_drop"], 0);
}

#[test]
fn classify_reports_the_regime() {
    let out = postchar(&["classify", "-c", "-1,-1,0,2,2,0,-1,-1"]);
    let v = stdout_json(&out);
    assert_eq!(v["unique_surface"], true);
    assert_eq!(v["open_in_hilbert"], false);
}

#[test]
fn validation_failure_exits_2() {
    let out = postchar(&["validate", "-c", "-1,-2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("gamma(1)"), "stderr: {err}");
}

#[test]
fn usage_error_exits_64() {
    let out = postchar(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(64));
    assert!(!out.stderr.is_empty());
    let out = postchar(&["invariants"]);
    assert_eq!(out.status.code(), Some(64), "missing character is usage");
}

#[test]
fn output_is_byte_stable() {
    let args = ["enumerate", "ag", "--bound", "8"];
    let a = postchar(&args);
    let b = postchar(&args);
    assert_eq!(a.stdout, b.stdout);

    let args = ["pfaffian", "random", "--betti", r#"{"c":3,"a":[1,1,1]}"#, "--seed", "5"];
    let a = postchar(&args);
    let b = postchar(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn seed_env_is_used_and_flag_wins() {
    let run = |envseed: Option<&str>, flag: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_postchar"));
        cmd.args(["pfaffian", "random", "--betti", r#"{"c":3,"a":[1,1,1]}"#]);
        cmd.env_remove("POSTCHAR_SEED");
        if let Some(s) = envseed {
            cmd.env("POSTCHAR_SEED", s);
        }
        if let Some(s) = flag {
            cmd.args(["--seed", s]);
        }
        let out = cmd.output().expect("binary runs");
        assert!(out.status.success());
        stdout_json(&out)["matrix"].clone()
    };
    let by_env = run(Some("11"), None);
    let by_flag = run(None, Some("11"));
    let flag_wins = run(Some("3"), Some("11"));
    assert_eq!(by_env, by_flag);
    assert_eq!(by_flag, flag_wins);
    let other = run(Some("12"), None);
    assert_ne!(by_env, other);
}

#[test]
fn inline_character_wins_over_file() {
    let dir = std::env::temp_dir();
    let path = dir.join("postchar_cli_char_test.json");
    let mut f = std::fs::File::create(&path).unwrap();
    write!(f, r#"{{"gamma": [-1, 2, -1]}}"#).unwrap();
    let out = postchar(&[
        "invariants",
        "--char-file",
        path.to_str().unwrap(),
        "-c",
        "-1,-1,4,-1,-1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["degree"], 5, "inline character must win");

    let out = postchar(&["invariants", "--char-file", path.to_str().unwrap()]);
    let v = stdout_json(&out);
    assert_eq!(v["degree"], 1);
    std::fs::remove_file(&path).ok();
}

#[test]
fn corrupted_catalog_exits_3() {
    let dir = std::env::temp_dir();
    let path = dir.join("postchar_cli_bad_catalog.json");
    std::fs::write(&path, r#"{"schema": 1, "surfaces": [{"name": "x"}]}"#).unwrap();
    let out = postchar(&[
        "surfaces",
        "list",
        "--catalog",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
    std::fs::remove_file(&path).ok();
}

#[test]
fn betti_validate_rejects_even_count_with_exit_2() {
    let out = postchar(&[
        "betti",
        "validate",
        "-c",
        "-1,-1,-1,6,-1,-1,-1",
        "--betti",
        r#"{"c":7,"a":[3,3,3,3,3,3]}"#,
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["valid"], false);

    let out = postchar(&[
        "betti",
        "validate",
        "-c",
        "-1,-1,-1,6,-1,-1,-1",
        "--betti",
        r#"{"c":7,"a":[3,3,3,3,3,3,3]}"#,
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["valid"], true);
}

#[test]
fn pfaffian_verify_round_trips_through_a_file() {
    let out = postchar(&[
        "pfaffian",
        "random",
        "--betti",
        r#"{"c":5,"a":[2,2,2,2,2]}"#,
        "--seed",
        "1",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["verify"]["pass"], true);

    let dir = std::env::temp_dir();
    let path = dir.join("postchar_cli_matrix_test.json");
    std::fs::write(&path, serde_json::to_string(&v["matrix"]).unwrap()).unwrap();
    let out = postchar(&[
        "pfaffian",
        "verify",
        "--matrix",
        path.to_str().unwrap(),
        "-c",
        "-1,-1,4,-1,-1",
        "--bound",
        "4",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["verify"]["pass"], true);

    // A wrong expectation fails with exit 2.
    let out = postchar(&[
        "pfaffian",
        "verify",
        "--matrix",
        path.to_str().unwrap(),
        "-c",
        "-1,2,-1",
        "--bound",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn surfaces_candidates_finds_the_unique_pair() {
    let out = postchar(&[
        "surfaces",
        "candidates",
        "-c",
        "-1,-1,-1,6,-1,-1,-1",
        "--bound",
        "30",
    ]);
    let v = stdout_json(&out);
    let candidates = v["candidates"].as_array().unwrap();
    assert_eq!(candidates.len(), 1);
    assert_eq!(candidates[0]["degree"], 6);
    assert_eq!(candidates[0]["genus"], 3);
}

#[test]
fn tsv_renders_one_row_per_item() {
    let out = postchar(&[
        "enumerate", "acm-p3", "--bound", "2", "--connected", "--format", "tsv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    // Exactly the line and the conic fit in degree <= 2, one row each.
    let rows: Vec<&str> = text.lines().filter(|l| l.starts_with('[')).collect();
    assert_eq!(rows.len(), 2, "{text}");
    assert!(rows[0].starts_with("[-1,1]\t1\t0"));
    assert!(rows[1].starts_with("[-1,0,1]\t2\t0"));
}
