use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_splitmw"))
}

fn run(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("splitmw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn construct_is_byte_identical_across_runs() {
    for args in [
        ["construct", "--minimal", "4,7"],
        ["construct", "--uniform", "3,6"],
        ["construct", "--rank2", "3,2,2"],
    ] {
        let a = run(&args, b"");
        let b = run(&args, b"");
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn minimal_pipes_into_check_mw() {
    let m = run(&["construct", "--minimal", "4,7"], b"");
    let out = run(&["check-mw", "-"], &m.stdout);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["format"], "mw-v1");
    assert_eq!(v["mult"], true);
    assert_eq!(v["t11"], "13");
}

#[test]
fn coloop_is_rejected_with_exit_2() {
    let m = run(&["construct", "--uniform", "1,1"], b"");
    let out = run(&["check-mw", "-"], &m.stdout);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ColoopsPresent"));
}

#[test]
fn rank2_enumeration_streams_passing_censuses() {
    let out = run(&["enumerate-rank2", "--max-n", "12"], b"");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let summaries: Vec<Value> = text
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .filter(|v| v["format"] == "rank2-census-v1")
        .collect();
    assert_eq!(summaries.len(), 11);
    assert!(summaries.iter().all(|s| s["all_pass"] == true));
    assert_eq!(summaries.last().unwrap()["n"], 12);
}

#[test]
fn engines_agree_at_the_cli() {
    for args in [
        ["construct", "--minimal", "5,11"],
        ["construct", "--uniform", "4,9"],
        ["construct", "--rank2", "4,3,3,1"],
    ] {
        let m = run(&args, b"");
        let out = run(&["tutte", "-", "--engine", "both"], &m.stdout);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let subset = run(&["tutte", "-", "--engine", "subset"], &m.stdout);
        assert_eq!(out.stdout, subset.stdout);
    }
}

#[test]
fn graph_file_feeds_construct_and_oracle() {
    let k4 = r#"{"format":"multigraph-v1","vertices":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;
    let path = scratch("k4.graph", k4);
    let out = run(&["oracle", path.to_str().unwrap()], b"");
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["tau"].as_str(), v["alpha"].as_str(), v["alpha_star"].as_str()), (Some("16"), Some("24"), Some("24")));
    assert_eq!(v["agree"], true);

    let m = run(&["construct", "--graphic", "-"], k4.as_bytes());
    assert!(m.status.success());
    let trace = run(&["trace", "-"], &m.stdout);
    assert_eq!(trace.status.code(), Some(0));
    let t = json(&trace);
    assert_eq!(t["rule"], "DeleteContract(0)");
    assert_eq!(t["verified"], true);
    let split = run(&["is-split", "-"], &m.stdout);
    assert_eq!(String::from_utf8(split.stdout).unwrap().trim(), "true");
}

#[test]
fn doubled_cycle_is_not_split() {
    let g = r#"{"format":"multigraph-v1","vertices":4,"edges":[[0,1],[0,1],[1,2],[1,2],[2,3],[3,0]]}"#;
    let m = run(&["construct", "--graphic", "-"], g.as_bytes());
    let flats = run(&["cyclic-flats", "-"], &m.stdout);
    let v = json(&flats);
    assert_eq!(v["format"], "cyclic-flats-v1");
    assert_eq!(v["split"], false);
    assert_eq!(v["proper_antichain"], false);
    let trace = run(&["trace", "-"], &m.stdout);
    assert_eq!(trace.status.code(), Some(2));
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(run(&["tutte", "-"], b"[]").status.code(), Some(2));
    assert_eq!(run(&["tutte", "/nonexistent/file"], b"").status.code(), Some(2));
    assert_eq!(run(&["construct", "--minimal", "7,4"], b"").status.code(), Some(2));
    assert_eq!(run(&["bogus"], b"").status.code(), Some(2));
    let bad = r#"{"format":"matroid-bases-v1","n":4,"rank":2,"bases":[[0,1],[2,3]]}"#;
    let out = run(&["check-mw", "-"], bad.as_bytes());
    assert_eq!(out.status.code(), Some(2));
}
