//! End-to-end tests of the binary: output determinism, exit codes, CSV
//! shape, and the table cache.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerfirst"))
        .args(args)
        .env_remove("EULERFIRST_CACHE_DIR")
        .output()
        .expect("binary runs")
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "stein", "--n", "20", "--d", "9", "--samples", "20000", "--seed", "42", "--format", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "JSON output must be deterministic");

    let c = run(&["table", "--n", "7", "--format", "csv"]);
    let d = run(&["table", "--n", "7", "--format", "csv"]);
    assert!(c.status.success());
    assert_eq!(c.stdout, d.stdout, "CSV output must be deterministic");
}

#[test]
fn table_csv_shape_and_column_sums() {
    let out = run(&["table", "--n", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let echo = lines.next().unwrap();
    assert!(echo.starts_with("# command=table"));
    assert!(echo.contains("n=6"));
    assert_eq!(lines.next().unwrap(), "n,d,k,count");
    let mut col_sums = [0u64; 6];
    let mut rows = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(f.len(), 4);
        assert_eq!(f[0], "6");
        let k: usize = f[2].parse().unwrap();
        col_sums[k - 1] += f[3].parse::<u64>().unwrap();
        rows += 1;
    }
    assert_eq!(rows, 36, "6x6 cells, one row each");
    assert!(col_sums.iter().all(|&s| s == 120), "columns sum to 5! = 120");
}

#[test]
fn verify_suite_exits_zero() {
    let out = run(&["verify", "--suite", "core", "--nmax", "6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 failed"));
    // every check line carries its PASS verdict
    assert!(text.lines().filter(|l| l.starts_with("PASS ")).count() >= 10);
}

#[test]
fn usage_errors_exit_two() {
    let unknown_flag = run(&["table", "--n", "6", "--bogus"]);
    assert_eq!(unknown_flag.status.code(), Some(2));
    let unknown_suite = run(&["verify", "--suite", "nope"]);
    assert_eq!(unknown_suite.status.code(), Some(2));
    let missing_mode = run(&["gf"]);
    assert_eq!(missing_mode.status.code(), Some(2));
    let bad_domain = run(&["geom", "--n", "10", "--d", "0"]);
    assert_eq!(bad_domain.status.code(), Some(2));
}

#[test]
fn resource_caps_exit_three() {
    let out = run(&["stein", "--n", "9", "--exact"]);
    assert_eq!(out.status.code(), Some(3));
    let msg = String::from_utf8(out.stderr).unwrap();
    assert!(msg.contains("cap"), "the refusal names the cap: {msg}");
}

#[test]
fn stein_report_carries_exact_target() {
    let out = run(&[
        "stein", "--n", "50", "--d", "24", "--samples", "1000", "--seed", "42", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["exact_target"], "1/25");
    assert_eq!(v["params"]["seed"], 42);
    assert_eq!(v["params"]["workers"], 1);
    assert!(v["result"]["mean"]["float"].is_f64(), "floats are tagged");
}

#[test]
fn table_cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("eulerfirst-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let run_cached = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_eulerfirst"))
            .args(args)
            .env("EULERFIRST_CACHE_DIR", &dir)
            .output()
            .expect("binary runs")
    };
    let first = run_cached(&["table", "--n", "5", "--format", "csv"]);
    assert!(first.status.success());
    let cache_file = dir.join("refined_first_n5_closed_form.csv");
    assert!(cache_file.exists(), "cache file written");
    let second = run_cached(&["table", "--n", "5", "--format", "csv"]);
    assert_eq!(first.stdout, second.stdout, "cache hit prints the same bytes");
    // corrupt cache entries are ignored and rewritten
    std::fs::write(&cache_file, "garbage").unwrap();
    let third = run_cached(&["table", "--n", "5", "--format", "csv"]);
    assert_eq!(first.stdout, third.stdout);
    let rewritten = std::fs::read_to_string(&cache_file).unwrap();
    assert!(rewritten.starts_with("n,d,k,count"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn json_rationals_are_strings() {
    let out = run(&["moments", "--n", "3", "--d", "1", "--max-m", "2", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["rising_moments"][2], "13/2");
    assert_eq!(v["result"]["expected_first"], "2");
}
