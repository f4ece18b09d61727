use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pblring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).unwrap()
}

fn verdict(doc: &Value, name: &str) -> bool {
    doc["report"]["predicates"]
        .as_array()
        .unwrap()
        .iter()
        .find(|p| p["name"] == name)
        .unwrap()["verdict"]
        .as_bool()
        .unwrap()
}

#[test]
fn check_z6_json() {
    let doc = json(&["check", "zmod(6)"]);
    assert_eq!(doc["schema"], "pblring/1");
    assert_eq!(doc["report"]["kind"], "check");
    assert_eq!(doc["report"]["ideals"], 4);
    assert!(verdict(&doc, "pseudo-bl-ring"));
    assert!(verdict(&doc, "von-neumann"));
    assert!(!verdict(&doc, "subdirectly-irreducible"));
}

#[test]
fn check_m2z2_is_pseudo_bl_but_not_reduced() {
    let doc = json(&["check", "matrix(zmod(2),2)"]);
    assert_eq!(doc["report"]["ideals"], 2);
    assert_eq!(doc["report"]["commutative"], false);
    assert!(verdict(&doc, "pseudo-bl-ring"));
    assert!(!verdict(&doc, "reduced"));
}

#[test]
fn negative_verdicts_still_exit_zero() {
    let o = run(&["check", "product(zmod(2),zmod(4))"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&["check", "null(2)"]);
    assert!(!verdict(&doc, "pseudo-bl-ring"));
}

#[test]
fn dot_output() {
    let o = run(&["ideals", "zmod(6)", "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph ideals {"));
    assert_eq!(dot.matches("[label=").count(), 4);
    assert_eq!(dot.matches(" -> ").count(), 4);
    let again = stdout(&run(&["--format", "dot", "ideals", "zmod(6)"]));
    assert_eq!(dot, again);
}

#[test]
fn dot_is_refused_for_non_lattice_reports() {
    let o = run(&["--format", "dot", "check", "zmod(6)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "zmod("]).status.code(), Some(2));
    assert_eq!(run(&["check", "zmod(6) junk"]).status.code(), Some(2));
    assert_eq!(run(&["check", "zmod(0)"]).status.code(), Some(2));
    assert_eq!(
        run(&["check", "quotient(zmod(4),[9])"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["check", "tables{2 0 0 1 1 0 0 1 1 1}"]).status.code(),
        Some(3)
    );
    assert_eq!(run(&["check", "zmod(257)"]).status.code(), Some(4));
    assert_eq!(
        run(&["check", "product(zmod(2),zmod(256))"]).status.code(),
        Some(4)
    );
    assert_eq!(
        run(&["--max-order", "8", "check", "zmod(9)"]).status.code(),
        Some(4)
    );
    assert_eq!(
        run(&["--max-order", "512", "check", "product(zmod(2),zmod(256))"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        run(&["props", "--only", "no-such-id", "--corpus", "none"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn table_file_round_trip() {
    let dumped = run(&["dump", "poly(2,[1,1])"]);
    assert_eq!(dumped.status.code(), Some(0));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(&dumped.stdout).unwrap();
    let path = f.path().to_str().unwrap().to_string();

    let direct = json(&["check", &path]);
    let via_spec = json(&["check", &format!("tables({path})")]);
    assert_eq!(
        direct["report"]["predicates"],
        via_spec["report"]["predicates"]
    );
    // x^2 + x + 1 over Z_2 is the field with four elements.
    assert_eq!(direct["report"]["ideals"], 2);
    assert!(verdict(&direct, "von-neumann"));
}

#[test]
fn malformed_table_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "3 0\n0 1 2\n1 2 0").unwrap();
    let o = run(&["check", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn algebra_and_decompose() {
    let alg = json(&["algebra", "zmod(8)"]);
    assert_eq!(alg["report"]["size"], 4);
    let dec = json(&["decompose", "zmod(12)"]);
    let d = &dec["report"]["decomposition"];
    assert_eq!(d["intersection_is_zero"], true);
    assert_eq!(d["factors"].as_array().unwrap().len(), 3);
}

#[test]
fn props_on_empty_corpus() {
    let doc = json(&["props", "--corpus", "none"]);
    assert_eq!(doc["report"]["matrix"]["rows"].as_array().unwrap().len(), 0);
}

#[test]
fn props_selection_is_thread_independent() {
    let a = run(&[
        "--format", "json", "props", "--only", "P3.5", "--only", "P3.6", "--jobs", "1",
    ]);
    let b = run(&[
        "--format", "json", "props", "--only", "P3.5", "--only", "P3.6", "--jobs", "4",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(
        doc["report"]["matrix"]["properties"]
            .as_array()
            .unwrap()
            .len(),
        2
    );
}

#[test]
fn find_reports_counterexamples() {
    let probe = run(&["--format", "json", "find", "baer-implies-reduced"]);
    assert_eq!(probe.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&probe.stdout).unwrap();
    assert!(doc["report"]["counterexample"].is_object());

    let none = json(&["find", "P3.5"]);
    assert!(none["report"]["counterexample"].is_null());
}

#[test]
fn json_is_stable_across_runs() {
    for args in [
        ["check", "triangular(zmod(2),2)"],
        ["ideals", "product(zmod(2),zmod(4))"],
    ] {
        let a = run(&[&["--format", "json"][..], &args[..]].concat());
        let b = run(&[&["--format", "json"][..], &args[..]].concat());
        assert_eq!(a.stdout, b.stdout);
    }
}
