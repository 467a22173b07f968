use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macchroma")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn coeff<'a>(v: &'a Value, index: &[u64]) -> Option<&'a str> {
    let index: Vec<Value> = index.iter().map(|&i| Value::from(i)).collect();
    v["terms"].as_array()?.iter().find(|t| t["index"].as_array() == Some(&index))?["coeff"].as_str()
}

#[test]
fn macdonald_methods_agree() {
    let mut outputs = Vec::new();
    for method in ["hhl", "chromatic", "tableaux", "powersum"] {
        let out = run(&["jqt", "--mu", "2,1,1", "--basis", "schur", "--method", method]);
        assert!(out.status.success(), "{method}");
        outputs.push(json(&out));
    }
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
    assert_eq!(outputs[0]["basis"], "schur");
    assert!(coeff(&outputs[0], &[2, 2]).is_some());
}

#[test]
fn prime_conjugates_the_input() {
    let a = run(&["jqt", "--mu", "3,1", "--prime", "--basis", "monomial"]);
    let b = run(&["jqt", "--mu", "2,1,1", "--basis", "monomial"]);
    assert_eq!(json(&a), json(&b));
}

#[test]
fn jack_subsets_in_power_basis() {
    let out = run(&["jack", "--mu", "2,1,1", "--basis", "power", "--method", "subsets"]);
    assert!(out.status.success());
    assert_eq!(coeff(&json(&out), &[2, 2]), Some("-α"));
    let text = run(&["jack", "--mu", "2,1,1", "--basis", "schur", "--format", "text"]);
    let text = String::from_utf8(text.stdout).unwrap();
    assert!(text.starts_with("J^(α)_{3,1}"));
    assert!(text.contains("s_{2,2}: 2 - 2*α^2"));
}

#[test]
fn chromatic_graph_selection() {
    let attacking = json(&run(&["chromatic", "--mu", "2,1,1", "--graph", "attacking"]));
    let none = json(&run(&["chromatic", "--mu", "2,1,1", "--graph", "mask:00"]));
    assert_eq!(attacking, none);
    let out = run(&["chromatic", "--mu", "2,1,1", "--graph", "augmented", "--basis", "schur", "--llt"]);
    assert!(out.status.success());
    let bad = run(&["chromatic", "--mu", "2,1,1", "--graph", "mask:1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_reports_json() {
    let out = run(&["verify", "--suite", "all", "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "all");
}

#[test]
fn conjecture_exit_codes() {
    let out = run(&["conjecture", "--which", "haglund", "--max-n", "4", "--max-k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["conjecture", "--which", "palindromic", "--max-n", "2", "--max-k", "2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(json(&out)["counterexample"].is_object());
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["jqt", "--mu", "3,x"]).status.code(), Some(2));
    assert_eq!(run(&["jqt", "--mu", "2,3"]).status.code(), Some(2));
    assert_eq!(run(&["jqt", "--mu", "2", "--method", "magic"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--max-n", "0"]).status.code(), Some(2));
}
