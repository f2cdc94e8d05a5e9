use std::path::PathBuf;
use std::process::{Command, Output};

use arq::Report;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn arq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = arq(args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn classify_e6_example() {
    let (code, out, _) = run(&["classify", &path("e6_example.txt")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("E 6"));
    assert!(out.contains("relabel "));
}

#[test]
fn classify_rejects_non_dynkin() {
    for name in ["affine_d4.txt", "cycle.txt"] {
        let (code, _, err) = run(&["classify", &path(name)]);
        assert_eq!(code, 2, "{name}");
        assert!(err.contains("not a Dynkin diagram"), "{err}");
    }
}

#[test]
fn coxeter_a3_linear() {
    let (code, out, _) = run(&["coxeter", &path("a3_linear.txt")]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "order 4"));
    assert!(out.lines().any(|l| l == "order identity holds"));
}

#[test]
fn check_passes_on_every_fixture() {
    for name in [
        "e6_example.txt",
        "f4_example.txt",
        "a3_linear.txt",
        "g2.txt",
    ] {
        let (code, out, _) = run(&["check", &path(name)]);
        assert_eq!(code, 0, "{name}: {out}");
        assert!(!out.contains("FAIL"));
        assert!(out.lines().count() >= 15);
    }
}

#[test]
fn cluster_a3() {
    let (code, out, _) = run(&["cluster", &path("a3_linear.txt")]);
    assert_eq!(code, 0);
    assert_eq!(out, "objects 9\nnilpotency module 3 derived 3 cluster 3\n");
}

#[test]
fn hammock_a3() {
    let (code, out, _) = run(&["hammock", &path("a3_linear.txt"), "-k", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("injective (2,3)\n"));
    assert!(out.contains("vertices (0,1) (1,2) (2,3)\n"));
    let (code, _, _) = run(&["hammock", &path("a3_linear.txt"), "-k", "4"]);
    assert_eq!(code, 2);
}

#[test]
fn bad_input_exits_2_and_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "n 2\narrow 1 2 0 1\n").unwrap();
    let (code, _, err) = run(&["build", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, _) = run(&["check", dir.path().join("missing.txt").to_str().unwrap()]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
}

#[test]
fn build_writes_json_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("e6.json");
    let dot = dir.path().join("e6.dot");
    let (code, out, _) = run(&[
        "build",
        &path("e6_example.txt"),
        "--json",
        json.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let report = Report::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report.dynkin.family, "E");
    assert_eq!(report.rho, [6, 5, 3, 4, 2, 1]);
    assert_eq!(report.m, [4, 4, 5, 5, 6, 6]);
    assert_eq!(report.coxeter_order, 12);
    assert_eq!(report.counts.indecomposables, 36);
    assert_eq!(report.counts.cluster, 42);
    assert_eq!(report.vertices.len(), 36);
    assert!(report.hammocks.is_none());
    let keys: Vec<_> = report.vertices.iter().map(|v| (v.i, v.r)).collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));

    let dot_text = std::fs::read_to_string(&dot).unwrap();
    assert!(dot_text.starts_with("digraph"));
    assert!(dot_text.contains("rankdir=LR;"));
    assert_eq!(dot_text.matches("rank=same;").count(), 7);
    assert_eq!(dot_text.matches("shape=box").count(), 6);
    assert_eq!(dot_text.matches("shape=doublecircle").count(), 6);
}

#[test]
fn build_output_is_deterministic_and_round_trips() {
    let first = run(&["build", &path("f4_example.txt"), "--hammocks", "--dot", "-"]);
    let second = run(&["build", &path("f4_example.txt"), "--hammocks", "--dot", "-"]);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, second.1);

    let (_, json, _) = run(&["build", &path("f4_example.txt"), "--hammocks"]);
    let report = Report::from_json(&json).unwrap();
    assert_eq!(report.to_json(), json);
    assert_eq!(report.hammocks.as_ref().map(Vec::len), Some(4));
    // Keys come out sorted at every depth.
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let top: Vec<&String> = value.as_object().unwrap().keys().collect();
    assert!(top.windows(2).all(|w| w[0] < w[1]));
    assert!(json.find("\"arrows\"").unwrap() < json.find("\"vertices\"").unwrap());
    assert!(!json.contains('.'), "integers only");
}

#[test]
fn reads_stdin() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_arq"))
        .args(["classify", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"n 2\narrow 2 1 3 1\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("G 2\n"));
}
