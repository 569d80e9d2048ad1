use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn ms4wb(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ms4wb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn emit(name: &str, param: Option<&str>) -> String {
    let mut args = vec!["corpus", "emit", name];
    args.extend(param);
    let o = ms4wb(&args, "");
    assert_eq!(code(&o), 0);
    String::from_utf8(o.stdout).unwrap()
}

#[test]
fn fig2_check_summary() {
    let o = ms4wb(
        &["check", "-", "--axioms", "s4u.bridge,s52.sym"],
        &emit("fig2F", None),
    );
    assert_eq!(code(&o), 1);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("s4u.bridge: valid"), "{err}");
    assert!(err.contains("s52.sym: counterexample V(p)={b}"), "{err}");
}

#[test]
fn validity_and_eval() {
    let g = emit("fig2G", None);
    let o = ms4wb(&["validity", "-", "<>p -> E p"], &g);
    assert_eq!(code(&o), 1);
    assert_eq!(
        stdout_json(&o)["result"]["counterexample"]["p"],
        json!(["1"])
    );
    let o = ms4wb(&["validity", "-", "<>[]p -> []p"], &g);
    assert_eq!(code(&o), 0);
    let o = ms4wb(
        &["eval", "-", "[]p", "--valuation", r#"{"p":["1","2"]}"#],
        &g,
    );
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["value"], json!(["1", "2"]));
}

#[test]
fn congruences_of_single_cluster() {
    let o = ms4wb(&["congruences", "-"], &emit("fig2G", None));
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["agree"], json!(true));
    assert_eq!(v["is_simple"], json!(true));
    assert_eq!(v["q_upsets"].as_array().unwrap().len(), 2);
}

#[test]
fn quotient_rejects_incorrect_partition() {
    let g = emit("fig2G", None);
    let o = ms4wb(
        &["quotient", "-", "--partition", r#"[["1","2"],["3"],["4"]]"#],
        &g,
    );
    assert_eq!(code(&o), 1);
    let o = ms4wb(
        &["quotient", "-", "--partition", r#"[["1","2","3","4"]]"#],
        &g,
    );
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["points"].as_array().unwrap().len(), 1);
}

#[test]
fn iso_with_itself() {
    let path = std::env::temp_dir().join(format!("ms4wb-cli-{}.json", std::process::id()));
    std::fs::write(&path, emit("three_layer", Some("2"))).unwrap();
    let p = path.to_str().unwrap();
    let o = ms4wb(&["iso", p, p], "");
    std::fs::remove_file(&path).ok();
    assert_eq!(code(&o), 0);
}

#[test]
fn translation_commands() {
    let s = emit("snake", Some("4"));
    let o = ms4wb(&["transfer", "-", "--gens", r#"[["0","[0]"]]"#], &s);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["k_hat_refines_l"], json!(true));
    let o = ms4wb(&["lift", "-", "--partition", r#"[["0","1","2","3"]]"#], &s);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout_json(&o)["partition"],
        json!([["0", "1", "2", "3"], ["[0]", "[2]"]])
    );
    let o = ms4wb(
        &["lift", "-", "--partition", r#"[["0","1"],["2","3"]]"#],
        &s,
    );
    assert_eq!(code(&o), 2);
}

#[test]
fn probes_and_enumeration() {
    let o = ms4wb(&["probe", "et_grid", "--params", "1,2,3"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o)["sizes"], json!([2, 16, 512]));
    let o = ms4wb(&["enumerate", "2", "--kind", "s52", "--count"], "");
    assert_eq!(stdout_json(&o)["count"], json!(4));
    let o = ms4wb(&["enumerate", "2", "--count"], "");
    assert_eq!(stdout_json(&o)["count"], json!(8));
}

#[test]
fn exit_codes_for_bad_input() {
    assert_eq!(code(&ms4wb(&["frobnicate"], "")), 2);
    assert_eq!(code(&ms4wb(&["classify", "-"], "not json")), 2);
    assert_eq!(code(&ms4wb(&["corpus", "emit", "snake", "3"], "")), 2);
    assert_eq!(
        code(&ms4wb(&["validity", "-", "<>(p"], &emit("single", None))),
        2
    );
    assert_eq!(code(&ms4wb(&["--help"], "")), 0);
}

#[test]
fn dot_output() {
    let o = ms4wb(&["dot", "-"], &emit("fig2G", None));
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("digraph"));
}
