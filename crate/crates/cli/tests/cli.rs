use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace { dir: tempfile::tempdir().unwrap() }
    }

    fn matrix(&self, name: &str, rows: usize, cols: usize, entries: &[&str]) -> PathBuf {
        let doc = serde_json::json!({ "rows": rows, "cols": cols, "entries": entries });
        self.raw(name, &doc.to_string())
    }

    fn raw(&self, name: &str, text: &str) -> PathBuf {
        let path = self.dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    }
}

fn rickart(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_rickart")).args(args).output().unwrap();
    let doc = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), doc)
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn entries(doc: &Value) -> Vec<String> {
    doc["entries"].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_string()).collect()
}

#[test]
fn right_projection_of_a_nilpotent() {
    let w = Workspace::new();
    let x = w.matrix("x.json", 2, 2, &["0", "1", "0", "0"]);
    let (code, doc) = rickart(&["rp", p(&x)]);
    assert_eq!(code, 0);
    assert_eq!(entries(&doc["right_projection"]), ["0", "0", "0", "1"]);
    assert_eq!(entries(&doc["right_annihilator"]), ["1", "0", "0", "0"]);
    assert!(doc["timing"]["elapsed_ms"].is_number());
}

#[test]
fn pseudoinverse_of_a_rectangular_matrix() {
    let w = Workspace::new();
    let a = w.matrix("a.json", 1, 2, &["1", "i"]);
    let (code, doc) = rickart(&["pinv", p(&a)]);
    assert_eq!(code, 0);
    assert_eq!(doc["pinv"]["rows"], 2);
    assert_eq!(entries(&doc["pinv"]), ["1/2", "-1/2i"]);
}

#[test]
fn order_answers_through_exit_status() {
    let w = Workspace::new();
    let a = w.matrix("a.json", 2, 2, &["1", "0", "0", "0"]);
    let b = w.matrix("b.json", 2, 2, &["1", "0", "0", "2"]);
    let c = w.matrix("c.json", 2, 2, &["2", "0", "0", "0"]);
    let (code, doc) = rickart(&["order", p(&a), p(&b)]);
    assert_eq!(code, 0);
    assert_eq!(doc["holds"], true);
    assert_eq!(entries(&doc["witness"]["complement"]), ["0", "0", "0", "2"]);
    let (code, doc) = rickart(&["order", p(&a), p(&c)]);
    assert_eq!(code, 1);
    assert_eq!(doc["witness"], Value::Null);
    let (code, _) = rickart(&["order", p(&a), p(&b), "--variant", "hermitian"]);
    assert_eq!(code, 0);
    let (code, _) = rickart(&["order", p(&a), p(&b), "--variant", "left"]);
    assert_eq!(code, 0);
}

#[test]
fn hermitian_variant_rejects_non_self_adjoint_input() {
    let w = Workspace::new();
    let n = w.matrix("n.json", 2, 2, &["0", "1", "0", "0"]);
    let (code, doc) = rickart(&["order", p(&n), p(&n), "--variant", "hermitian"]);
    assert_eq!(code, 3);
    assert_eq!(doc["error"], "precondition");
}

#[test]
fn meet_join_and_star_minus() {
    let w = Workspace::new();
    let a = w.matrix("a.json", 3, 3, &["1", "0", "0", "0", "2", "0", "0", "0", "0"]);
    let b = w.matrix("b.json", 3, 3, &["0", "0", "0", "0", "2", "0", "0", "0", "3"]);
    let x = w.matrix("x.json", 3, 3, &["1", "0", "0", "0", "2", "0", "0", "0", "3"]);
    let (code, doc) = rickart(&["meet", p(&a), p(&b)]);
    assert_eq!(code, 0);
    assert_eq!(entries(&doc["meet"]), ["0", "0", "0", "0", "2", "0", "0", "0", "0"]);
    let (code, doc) = rickart(&["join", p(&a), p(&b)]);
    assert_eq!(code, 0);
    assert_eq!(doc["join"], serde_json::from_str::<Value>(&std::fs::read_to_string(&x).unwrap()).unwrap());
    let (code, _) = rickart(&["join", p(&a), p(&b), "--bound", p(&x)]);
    assert_eq!(code, 0);
    let (code, doc) = rickart(&["star-minus", p(&x), p(&a)]);
    assert_eq!(code, 0);
    assert_eq!(entries(&doc["result"]), ["0", "0", "0", "0", "0", "0", "0", "0", "3"]);
    let (code, _) = rickart(&["join", p(&a), p(&b), "--bound", p(&a)]);
    assert_eq!(code, 3);
}

#[test]
fn join_reports_a_missing_upper_bound() {
    let w = Workspace::new();
    let a = w.matrix("a.json", 2, 2, &["1", "0", "0", "0"]);
    let c = w.matrix("c.json", 2, 2, &["2", "0", "0", "0"]);
    let (code, doc) = rickart(&["join", p(&a), p(&c)]);
    assert_eq!(code, 1);
    assert_eq!(doc["exists"], false);
    assert_eq!(doc["join"], Value::Null);
}

#[test]
fn coherence_and_glb() {
    let w = Workspace::new();
    let a = w.matrix("a.json", 2, 2, &["1", "0", "0", "0"]);
    let b = w.matrix("b.json", 2, 2, &["1", "0", "0", "2"]);
    let t = w.matrix("t.json", 2, 2, &["1", "1", "0", "1"]);
    let (code, doc) = rickart(&["coherent", p(&a), p(&b)]);
    assert_eq!(code, 0);
    assert_eq!(entries(&doc["join"]), ["1", "0", "0", "2"]);
    let (code, doc) = rickart(&["coherent", p(&a), p(&t)]);
    assert_eq!(code, 1);
    assert_eq!(doc["coherent"], false);
    let c = w.matrix("c.json", 2, 2, &["1", "0", "0", "3"]);
    let (code, doc) = rickart(&["glb", p(&b), p(&c), p(&a)]);
    assert_eq!(code, 0);
    assert_eq!(entries(&doc["glb"]), ["1", "0", "0", "0"]);
}

#[test]
fn malformed_input_exits_with_two() {
    let w = Workspace::new();
    let bad = w.raw("bad.json", r#"{"rows":1,"cols":1,"entries":["1 /2"]}"#);
    let (code, doc) = rickart(&["rp", p(&bad)]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"], "parse");
    let (code, _) = rickart(&["rp", "/nonexistent/matrix.json"]);
    assert_eq!(code, 2);
}

#[test]
fn shape_mismatch_exits_with_three() {
    let w = Workspace::new();
    let a = w.matrix("a.json", 2, 2, &["1", "0", "0", "0"]);
    let r = w.matrix("r.json", 2, 3, &["1", "0", "0", "0", "1", "0"]);
    let s = w.matrix("s.json", 3, 3, &["1", "0", "0", "0", "1", "0", "0", "0", "1"]);
    assert_eq!(rickart(&["meet", p(&a), p(&s)]).0, 3);
    assert_eq!(rickart(&["rp", p(&r)]).0, 3);
}

#[test]
fn verify_runs_a_suite() {
    let (code, doc) = rickart(&["verify", "--suite", "penrose", "--trials", "20", "--seed", "3", "--dim", "4"]);
    assert_eq!(code, 0);
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["reports"][0]["suite"], "penrose");
    assert_eq!(doc["reports"][0]["trials"], 20);
    let (code, _) = rickart(&["verify", "--suite", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "general-meet", "--trials", "8", "--seed", "9", "--dim", "4"];
    let (_, a) = rickart(&args);
    let (_, b) = rickart(&args);
    assert_eq!(a["reports"], b["reports"]);
}
