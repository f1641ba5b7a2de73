use std::process::{Command, Output};

use serde_json::Value;

fn monideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = monideal(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

const F1: &str = "(x^3, x*y^2, y^3*z)";

#[test]
fn symbolic_power_text_and_json() {
    let out = monideal(&["symbolic", F1, "-n", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("x^3*y^3"));
    let v = json(&["symbolic", "--ideal", F1, "-n", "2"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["ring"], serde_json::json!(["x", "y", "z"]));
    assert!(v["generators"].as_array().unwrap().contains(&serde_json::json!([3, 3, 0])));
}

#[test]
fn blockwise_matches_direct() {
    let sum = "(x^3, x*y^2, y^3*z, t^5, t^3*u^2, u^5*v)";
    let direct = json(&["symbolic", sum, "-n", "3"]);
    let blockwise = json(&["symbolic", sum, "-n", "3", "--blockwise"]);
    assert_eq!(direct, blockwise);
}

#[test]
fn explicit_ring_fixes_variable_order() {
    let v = json(&["--ring", "z,y,x", "power", "(x*y)", "-n", "2"]);
    assert_eq!(v["ring"], serde_json::json!(["z", "y", "x"]));
    assert_eq!(v["generators"], serde_json::json!([[0, 2, 2]]));
}

#[test]
fn decompositions_and_primes() {
    let out = stdout(&monideal(&["decompose", F1]));
    assert_eq!(out, "(x^3, x*y^2, y^3)\n(x, z)\n");
    let out = stdout(&monideal(&["decompose", "--irreducible", F1]));
    assert_eq!(out.lines().count(), 3);
    let out = stdout(&monideal(&["assprimes", "(x^2, x*y)"]));
    assert_eq!(out, "(x)\n(x, y)\n");
    let out = stdout(&monideal(&["assprimes", "--maximal", "(x^2, x*y)"]));
    assert_eq!(out, "(x, y)\n");
}

#[test]
fn membership_routes() {
    let yes = |args: &[&str]| stdout(&monideal(args)).trim() == "yes";
    assert!(yes(&["contains", F1, "--monomial", "x^3*y^3", "--symbolic", "2"]));
    assert!(!yes(&["contains", F1, "--monomial", "x^3*y^3", "--power", "2"]));
    assert!(yes(&["contains", F1, "--monomial", "x^4"]));
}

#[test]
fn scan_reports_lower_bound() {
    let sum = "(x^3, x*y^2, y^3*z, t^5, t^3*u^2, u^5*v)";
    let v = json(&["scan", sum, "--max-m", "5", "--max-r", "4", "--threads", "2"]);
    assert_eq!(v["best_ratio"], "5/4");
    assert_eq!(v["best_cells"][0]["witness_text"], "x^3*y^3*t^10*u^5");
    assert!(v["note"].as_str().unwrap().contains("lower bound"));
    let text = stdout(&monideal(&["scan", sum, "--max-m", "5", "--max-r", "4", "--no-shortcuts"]));
    assert!(text.contains("certified lower bound: resurgence >= 5/4"));
}

#[test]
fn bounds_and_certificates() {
    let v = json(&["bounds", "--a", "2", "--b", "1"]);
    assert_eq!((v["bound"].as_str(), v["rule"].as_str()), (Some("2/1"), Some("collapse")));
    let v = json(&[
        "certify-product",
        "--part",
        "(x^3, x*y^2, y^3*z):2:2:x^3*y^3",
        "--part",
        "(t^5, t^3*u^2, u^5*v):3:3:t^10*u^5",
    ]);
    assert_eq!((v["m"].as_u64(), v["r"].as_u64()), (Some(5), Some(4)));
    assert_eq!(v["witness_text"], "x^3*y^3*t^10*u^5");
    let c = json(&["check", F1, "--m", "3", "--r", "2"]);
    assert_eq!(c["verdict"], "contained");
}

#[test]
fn families() {
    assert_eq!(stdout(&monideal(&["family", "F", "--d", "2"])), "(x^5, x^3*y^2, y^5*z)\n");
    assert_eq!(stdout(&monideal(&["family", "star", "--m", "2", "--d", "3"])), "(x1*x2, x1*x3, x2*x3)\n");
    let v = json(&["family", "pm", "--m", "2"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 9);
    let out = stdout(&monideal(&["family", "iterated", "--k", "2", "--ideal", "(x^2, x*y)"]));
    assert_eq!(out, "(x1^2, x1*y1, x2^2, x2*y2)\n");
}

#[test]
fn session_parsing() {
    let out = stdout(&monideal(&["parse", "ring x,y; I = (x,y); I^2; (x) cap (y)"]));
    assert_eq!(out, "I = (x, y)\n(x^2, x*y, y^2)\n(x*y)\n");
    let v = json(&["parse", "ring x,y; I = (x,y)"]);
    assert_eq!(v["bindings"]["I"]["generators"], serde_json::json!([[1, 0], [0, 1]]));
}

#[test]
fn exit_codes() {
    let parse_error = monideal(&["power", "(x", "-n", "2"]);
    assert_eq!(parse_error.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse_error.stderr).contains("1:3"));
    assert_eq!(monideal(&["bounds", "--a", "1/2", "--b", "1"]).status.code(), Some(2));
    assert_eq!(monideal(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(monideal(&["scan"]).status.code(), Some(2));
    let rejected = monideal(&[
        "certify-product",
        "--part",
        "(x^3, x*y^2, y^3*z):2:2:x^2",
        "--part",
        "(u^3):1:2:u",
    ]);
    assert_eq!(rejected.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&rejected.stderr).contains("local witness 0"));
}

#[test]
fn verify_paper_passes() {
    let out = monideal(&["verify-paper", "--threads", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().filter(|l| l.starts_with("PASS")).count() >= 10);
    assert!(!text.contains("FAIL"));
}
