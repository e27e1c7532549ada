use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagcode"))
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

fn params(q: &str, k: &str, h: &str, s: &str) -> Vec<String> {
    ["--q", q, "--k", k, "--h", h, "--s", s]
        .iter()
        .map(|x| x.to_string())
        .collect()
}

fn run_with(cmd: &str, base: &[String], extra: &[&str]) -> Output {
    let mut args = vec![cmd];
    args.extend(base.iter().map(String::as_str));
    args.extend(extra);
    run(&args)
}

#[test]
fn construct_examples() {
    let o = run_with("construct", &params("2", "2", "0", "2"), &["--family", "full"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("5 flags, n = 4"));
    assert!(stdout(&o).starts_with("4 2 5\n"));

    let o = run_with("construct", &params("2", "2", "1", "3"), &["--family", "optimum"]);
    assert!(stderr(&o).contains("41 flags, n = 7, type (1,2,5,6)"));

    let o = run_with("construct", &params("2", "2", "1", "4"), &["--family", "longer"]);
    assert!(stderr(&o).contains("169 flags, n = 9, type (1,2,3,5,7,8)"));

    let o = run_with("construct", &params("2", "2", "0", "2"), &["--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 5);
    assert_eq!(v["flags"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_exit_codes() {
    let o = run_with("verify", &params("2", "2", "1", "3"), &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains(" FAIL "));

    let o = run_with("verify", &params("2", "3", "2", "2"), &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("full.classification quasi-optimum quasi-optimum PASS"));

    let o = run_with("verify", &params("2", "2", "0", "4"), &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("longer.cardinality_consistent true false FAIL"));

    let o = run_with("verify", &params("2", "2", "2", "3"), &[]);
    assert_eq!(o.status.code(), Some(2));

    let o = run_with("verify", &params("2", "2", "1", "3"), &["--order-cap", "10"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));

    let o = run(&["verify", "--q", "2", "--k", "2,3", "--s", "2"]);
    assert_eq!(o.status.code(), Some(2), "lists need --sweep");
}

#[test]
fn json_report_schema() {
    let o = run_with("verify", &params("2", "2", "1", "2"), &["--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["params"]["n"], 5);
    assert_eq!(v["type"], "1,2,3,4");
    let claims = v["claims"].as_array().unwrap();
    assert!(!claims.is_empty());
    for c in claims {
        for key in ["id", "anchor", "expected", "computed", "pass"] {
            assert!(c.get(key).is_some(), "claim lacks {key}");
        }
    }
    assert_eq!(v["totals"]["claims"].as_u64().unwrap() as usize, claims.len());
    assert_eq!(v["totals"]["failed"], 0);
}

#[test]
fn sweep_reports_every_instance() {
    let o = run(&[
        "verify", "--sweep", "--q", "2", "--k", "2", "--h", "0", "--s", "3,4", "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("2,2,0,3,")));
    assert!(out.lines().any(|l| l.starts_with("2,2,0,4,") && l.ends_with(",false")));
    assert!(!out.lines().any(|l| l.starts_with("2,2,0,3,") && l.ends_with(",false")));
}

#[test]
fn file_round_trip_matches_in_memory_verification() {
    let dir = tempfile::tempdir().unwrap();
    let base = params("2", "2", "1", "3");
    for family in ["optimum", "longer"] {
        let path = dir.path().join(format!("{family}.txt"));
        let path = path.to_str().unwrap();
        let o = run_with("construct", &base, &["--family", family, "--out", path]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains("41 flags"));
        let from_file = run_with("verify", &base, &["--family", family, "--code", path]);
        let in_memory = run_with("verify", &base, &["--family", family]);
        assert_eq!(from_file.status.code(), Some(0));
        assert_eq!(stdout(&from_file), stdout(&in_memory));
    }
}

/// Swaps two rows of a flag's generator inside a code file.
fn corrupt(text: &str) -> String {
    let lines: Vec<&str> = text.lines().collect();
    let starts: Vec<usize> = lines
        .iter()
        .enumerate()
        .filter(|(_, l)| l.starts_with("type "))
        .map(|(i, _)| i)
        .collect();
    // the second flag becomes the first flag with its 2nd and 3rd rows swapped
    let first: Vec<&str> = lines[starts[0]..starts[1]].to_vec();
    let mut second = first.clone();
    second.swap(3, 4);
    let mut out: Vec<&str> = lines[..starts[1]].to_vec();
    out.extend(second);
    out.extend(&lines[starts[1] + first.len()..]);
    out.join("\n") + "\n"
}

#[test]
fn corrupted_code_names_the_failing_claim() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    let bad = dir.path().join("bad.txt");
    let base = params("2", "2", "0", "2");
    run_with(
        "construct",
        &base,
        &["--family", "full", "--out", good.to_str().unwrap()],
    );
    fs::write(&bad, corrupt(&fs::read_to_string(&good).unwrap())).unwrap();
    let o = run_with("verify", &base, &["--family", "full", "--code", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("full.min_distance 8 2 FAIL"), "{}", stdout(&o));

    fs::write(&bad, "4 2 5\ntype 1,2\n").unwrap();
    let o = run_with("verify", &base, &["--family", "full", "--code", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spectrum_output() {
    let o = run_with("spectrum", &params("2", "2", "0", "2"), &["--family", "full"]);
    assert_eq!(stdout(&o), "distance,count\n8,10\n");

    let o = run_with("spectrum", &params("2", "2", "1", "3"), &["--family", "longer"]);
    let out = stdout(&o);
    let first = out.lines().nth(1).unwrap();
    assert!(first.starts_with("16,"), "{out}");

    let dir = tempfile::tempdir().unwrap();
    let single = dir.path().join("single.txt");
    fs::write(&single, "4 2 1\ntype 1,2,3\n3 4 GF(2)\n1 0 0 0\n0 1 0 0\n0 0 1 0\n").unwrap();
    let o = run(&["spectrum", "--code", single.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "distance,count\n");

    fs::write(&single, "not a code\n").unwrap();
    assert_eq!(
        run(&["spectrum", "--code", single.to_str().unwrap()]).status.code(),
        Some(2)
    );
}

fn write_flag(dir: &Path, name: &str, ty: &str, rows: &[&str]) -> String {
    let path = dir.join(name);
    let n = rows[0].split(' ').count();
    let text = format!("type {ty}\n{} {n} GF(2)\n{}\n", rows.len(), rows.join("\n"));
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn distance_between_flag_files() {
    let dir = tempfile::tempdir().unwrap();
    let coord = write_flag(dir.path(), "a", "1,2,3", &["1 0 0 0", "0 1 0 0", "0 0 1 0"]);
    let anti = write_flag(dir.path(), "b", "1,2,3", &["0 0 0 1", "0 0 1 0", "0 1 0 0"]);
    let short = write_flag(dir.path(), "c", "2", &["1 0 0 0", "0 1 0 0"]);
    let other = write_flag(dir.path(), "d", "2", &["1 0 0 0", "0 0 1 0"]);

    assert_eq!(stdout(&run(&["distance", &coord, &coord])).trim(), "0");
    assert_eq!(stdout(&run(&["distance", &coord, &anti])).trim(), "8");
    // a single-level flag is just a subspace: dim 2 + 2 - 2 * 1
    assert_eq!(stdout(&run(&["distance", &short, &other])).trim(), "2");
    assert_eq!(run(&["distance", &coord, &short]).status.code(), Some(2));
}

#[test]
fn report_summarizes_a_code() {
    let o = run_with("report", &params("2", "3", "2", "2"), &["--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["size"], 33);
    assert_eq!(v["max_distance"], 32);
    assert_eq!(v["min_distance"], 30);
    assert_eq!(v["label"], "quasi-optimum");
    assert_eq!(v["components"].as_array().unwrap().len(), 7);
}

#[test]
fn explicit_polynomials() {
    let base = params("2", "2", "1", "2");
    let o = run_with("verify", &base, &["--poly", "x^3+x^2+1 over GF(2)"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let o = run_with("verify", &base, &["--poly", "x^3+x+1 over GF(3)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run_with("verify", &base, &["--poly", "x^3+1 over GF(2)"]);
    assert_eq!(o.status.code(), Some(2));
}
