use std::process::{Command, Output};

use serde_json::Value;

fn qeuler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .args(args)
        .env_remove("QEL_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_without_timing(o: &Output) -> Value {
    let mut v: Value = serde_json::from_slice(&o.stdout).unwrap();
    v.as_object_mut().unwrap().remove("wall_time_ms");
    v
}

#[test]
fn poly_examples() {
    let o = qeuler(&["poly", "maj-exc", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 + q*t\n");
    assert_eq!(stdout(&qeuler(&["poly", "maj-exc", "--n", "0"])), "1\n");
    let aid = stdout(&qeuler(&["poly", "aid-des", "--n", "3"]));
    assert_eq!(aid, stdout(&qeuler(&["poly", "maj-exc", "--n", "3"])));
    assert_eq!(aid, "1 + 2*q*t + q^2*t + q^3*t + q^2*t^2\n");
}

#[test]
fn poly_formats() {
    let o = qeuler(&["poly", "fix-refined", "--n", "2", "--json"]);
    let v = json_without_timing(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["output"], "q*t + r^2");
    let csv = stdout(&qeuler(&["poly", "maj-exc", "--n", "2", "--csv"]));
    assert_eq!(csv, "q,t,coeff\n0,0,1\n1,1,1\n");
}

#[test]
fn poly_guard() {
    let o = qeuler(&["poly", "maj-exc", "--n", "12"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(qeuler(&["verify", "thm1-1", "--N", "6"]).status.code(), Some(0));
    assert_eq!(qeuler(&["verify", "all", "--small"]).status.code(), Some(0));
    assert_eq!(qeuler(&["verify", "eq13-literal"]).status.code(), Some(1));
    assert_eq!(qeuler(&["verify", "thm9-9"]).status.code(), Some(2));
    assert_eq!(qeuler(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_eq13_lists_dims() {
    let o = qeuler(&["verify", "eq13", "--n", "3", "--q", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("dims n=3,q=2: [8, 22, 8]"), "{text}");
}

#[test]
fn failing_report_names_first_mismatch() {
    let o = qeuler(&["verify", "eq13-literal", "--n", "2", "--json"]);
    let v = json_without_timing(&o);
    assert_eq!(v["pass"], false);
    let m = &v["reports"][0]["report"]["first_mismatch"];
    assert_eq!(m["n"], 2);
    assert_eq!(m["lhs"], "2");
    assert_eq!(m["rhs"], "1");
}

#[test]
fn json_is_deterministic_across_threads() {
    let a = qeuler(&["verify", "thm1-2", "--n", "8", "--json", "--threads", "1"]);
    let b = qeuler(&["verify", "thm1-2", "--n", "8", "--json", "--threads", "5"]);
    assert_eq!(json_without_timing(&a), json_without_timing(&b));
    let env = Command::new(env!("CARGO_BIN_EXE_qeuler"))
        .args(["poly", "fix-refined", "--n", "8"])
        .env("QEL_THREADS", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&env), stdout(&qeuler(&["poly", "fix-refined", "--n", "8", "--threads", "1"])));
}

#[test]
fn homology_examples() {
    let o = qeuler(&["homology", "bn", "--n", "3", "--j", "2"]);
    assert!(stdout(&o).contains("reduced betti from dimension 0: [0, 4]"));
    let o = qeuler(&["homology", "bn", "--n", "1", "--j", "1"]);
    assert!(stdout(&o).contains("reduced betti from dimension -1: [1]"));
    let o = qeuler(&["homology", "bnq", "--n", "3", "--q", "2", "--j", "2", "--json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["betti_from_minus_one"], serde_json::json!([0, 0, 22]));
    assert_eq!(qeuler(&["homology", "bn", "--n", "3", "--j", "4"]).status.code(), Some(2));
    assert_eq!(qeuler(&["homology", "bnq", "--n", "5", "--q", "3", "--j", "1"]).status.code(), Some(2));
    assert_eq!(qeuler(&["homology", "bnq", "--n", "2", "--q", "5", "--j", "1"]).status.code(), Some(2));
}

#[test]
fn poset_dump() {
    let v: Value = serde_json::from_slice(&qeuler(&["poset", "ideal", "--n", "2", "--j", "2"]).stdout).unwrap();
    assert_eq!(v["elements"], serde_json::json!(["({1},1)", "({2},1)"]));
    assert_eq!(v["covers"], serde_json::json!([]));
    let v: Value = serde_json::from_slice(&qeuler(&["poset", "subspace", "--q", "2", "--n", "3"]).stdout).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 16);
}
