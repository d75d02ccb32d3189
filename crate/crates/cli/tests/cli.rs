use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subcomp"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const W5: &str = "n 5\n0 1\n0 2\n0 3\n0 4\n1 2\n2 3\n3 4\n4 1\n";
const P6: &str = "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n";
const C6: &str = "n 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";

#[test]
fn analyze_examples() {
    let dir = TempDir::new().unwrap();
    let w5 = write(&dir, "w5.txt", W5);
    let out = run(&["analyze", s(&w5)]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!((v["mr"].as_u64(), v["c2"].as_u64(), v["t2"].as_u64()), (Some(2), Some(3), Some(1)));
    assert_eq!(v["exceptional"], true);
    assert!(v["forest"].is_null());

    let p6 = write(&dir, "p6.txt", P6);
    let v = json(&run(&["analyze", s(&p6)]));
    assert_eq!((v["mr"].as_u64(), v["c2"].as_u64(), v["t2"].as_u64()), (Some(5), Some(5), Some(3)));
    assert_eq!(v["forest"]["path_cover_number"], 1);

    let v = json(&run_stdin(&["analyze", "-"], "C?\n"));
    assert_eq!((v["mr"].as_u64(), v["c2"].as_u64(), v["t2"].as_u64()), (Some(0), Some(0), Some(0)));
    assert_eq!(v["n"], 4);
}

#[test]
fn verify_figure_system() {
    let dir = TempDir::new().unwrap();
    let w5 = write(&dir, "w5.txt", W5);
    let good = write(&dir, "good.json", r#"{"system": [[1,2,3,4],[0,1,3],[0,2,4]]}"#);
    assert_eq!(run(&["verify", s(&w5), s(&good)]).status.code(), Some(0));
    let bad = write(&dir, "bad.json", r#"[[1,2,3,4],[0,1,3]]"#);
    let out = run(&["verify", s(&w5), s(&bad)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!json(&out)["mismatches"].as_array().unwrap().is_empty());
    let wrong_count = write(&dir, "count.json", r#"{"c2": 2, "system": [[1,2,3,4],[0,1,3],[0,2,4]]}"#);
    assert_eq!(run(&["verify", s(&w5), s(&wrong_count)]).status.code(), Some(1));
}

#[test]
fn printed_certificates_verify() {
    let dir = TempDir::new().unwrap();
    for (name, text) in [("w5", W5), ("p6", P6), ("c6", C6), ("k33", "EFz_\n")] {
        let g = write(&dir, name, text);
        for cmd in ["construct", "tricliques"] {
            let out = run(&[cmd, s(&g)]);
            assert!(out.status.success(), "{cmd} {name}");
            let cert = write(&dir, &format!("{name}.{cmd}.json"), std::str::from_utf8(&out.stdout).unwrap());
            assert_eq!(run(&["verify", s(&g), s(&cert)]).status.code(), Some(0), "{cmd} {name}");
        }
        let v = json(&run(&["analyze", s(&g)]));
        let cert = write(&dir, &format!("{name}.system.json"), &v["certificates"]["system"].to_string());
        assert_eq!(run(&["verify", s(&g), s(&cert)]).status.code(), Some(0));
    }
}

#[test]
fn distance_between_cycle_and_path() {
    let dir = TempDir::new().unwrap();
    let c6 = write(&dir, "c6.txt", C6);
    let p6 = write(&dir, "p6.txt", P6);
    let v = json(&run(&["distance", s(&c6), s(&p6)]));
    assert_eq!(v["distance"], 1);
    let w5 = write(&dir, "w5.txt", W5);
    assert_eq!(run(&["distance", s(&c6), s(&w5)]).status.code(), Some(2));
}

fn all_graph6_up_to(n: usize) -> String {
    (1..=n).map(|k| String::from_utf8(run(&["enumerate", "--n", &k.to_string()]).stdout).unwrap()).collect()
}

#[test]
fn scan_finds_catalog() {
    let corpus = all_graph6_up_to(7);
    assert_eq!(corpus.lines().count(), 1252);
    let v = json(&run_stdin(&["scan", "--forbidden", "c2", "--k", "2"], &corpus));
    assert_eq!(v["invariant"], "c2");
    assert_eq!(v["count"], 8);
    let small = all_graph6_up_to(5);
    let v = json(&run_stdin(&["scan", "-", "--forbidden", "c2", "--k", "1"], &small));
    assert_eq!(v["count"], 2);
}

#[test]
fn scan_keeps_input_order() {
    let out = run_stdin(&["scan", "--jobs", "2"], "D|s\nE???\nA_\n");
    let lines: Vec<Value> = String::from_utf8(out.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let order: Vec<&str> = lines.iter().map(|v| v["graph6"].as_str().unwrap()).collect();
    assert_eq!(order, vec!["D|s", "E???", "A_"]);
    assert_eq!(lines[0]["c2"], 3);
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.g6", "I?h]@eOWG\n");
    let a = run(&["analyze", s(&g)]).stdout;
    let b = run(&["analyze", s(&g), "--jobs", "1"]).stdout;
    let c = run(&["analyze", s(&g), "--jobs", "3"]).stdout;
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "n x\n0 1\n");
    assert_eq!(run(&["analyze", s(&bad)]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/graph"]).status.code(), Some(2));
    let c7 = write(&dir, "c7.txt", "n 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n");
    let out = run(&["--ceiling", "5", "analyze", s(&c7)]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[0, 1, 2, 3, 4, 5, 6]"));
    assert_eq!(run(&["enumerate", "--n", "8"]).status.code(), Some(3));
}

#[test]
fn forests_skip_the_ceiling() {
    let dir = TempDir::new().unwrap();
    let edges: String = (1..40).map(|v| format!("{} {v}\n", (v - 1) / 2)).collect();
    let tree = write(&dir, "tree.txt", &format!("n 40\n{edges}"));
    let out = run(&["--ceiling", "10", "analyze", s(&tree)]);
    assert!(out.status.success());
    let v = json(&out);
    let p = v["forest"]["path_cover_number"].as_u64().unwrap();
    assert_eq!(v["c2"].as_u64().unwrap(), 40 - p);
    let cert = write(&dir, "sys.json", &v["certificates"]["system"].to_string());
    assert_eq!(run(&["verify", s(&tree), s(&cert)]).status.code(), Some(0));
}

#[test]
fn table_and_enumerate_formats() {
    let out = run_stdin(&["--table", "bounds", "-"], "D|s\n");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("tau") && l.trim_end().ends_with('3')));
    assert_eq!(String::from_utf8(run(&["enumerate", "--n", "5"]).stdout).unwrap().lines().count(), 34);
    let v = json(&run(&["enumerate", "--n", "3", "--json"]));
    assert_eq!(v.as_array().unwrap().len(), 4);
    let forced = run_stdin(&["--format", "edges", "analyze", "-"], "D|s\n");
    assert_eq!(forced.status.code(), Some(2));
}
