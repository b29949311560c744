use std::process::{Command, Output};

use serde_json::Value;

fn charvar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charvar")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> (Value, String) {
    let out = charvar(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    (serde_json::from_str(&text).expect("valid JSON"), text)
}

fn all_passed(doc: &Value) -> bool {
    doc["reports"].as_array().unwrap().iter().all(|r| {
        let s = r["status"].as_str().unwrap();
        s == "pass" || s == "numeric-pass"
    })
}

#[test]
fn trace_prints_the_polynomial_first() {
    let out = charvar(&["trace", "--word", "a b^-1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().next(), Some("x*y - z"));
}

#[test]
fn trace_of_a_commutator() {
    let (doc, _) = json(&["trace", "--word", "a b a^-1 b^-1", "--json"]);
    let poly = doc["data"]["trace"].as_str().or_else(|| doc["data"]["polynomial"].as_str()).unwrap();
    assert_eq!(poly, "-x*y*z + x^2 + y^2 + z^2 - 2");
}

#[test]
fn twobridge_b7_3_phi_is_cubic() {
    let (doc, _) = json(&["twobridge", "--p", "7", "--m", "3", "--json"]);
    let phi = doc["data"]["phi"].as_str().unwrap();
    assert!(phi.contains("z^3") && !phi.contains("z^4"), "{phi}");
    assert!(all_passed(&doc));
}

#[test]
fn json_is_byte_stable() {
    let (doc, text) = json(&["pretzel", "--n", "3", "--json"]);
    let again = serde_json::to_string_pretty(&doc).unwrap();
    assert_eq!(text.trim_end(), again);
    assert!(all_passed(&doc));
}

#[test]
fn unknot_demo_quotient() {
    let (doc, _) = json(&["qtorus", "demo-unknot", "--range", "-5", "5", "--json"]);
    assert!(all_passed(&doc));
    assert!(doc.to_string().contains("M^2 - 1"));
}

#[test]
fn verify_pretzel_window() {
    let out = charvar(&["verify", "--suite", "pretzel", "--n-range", "-4", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn verify_sorts_reports() {
    let (doc, _) = json(&["verify", "--suite", "twobridge", "--p-max", "11", "--json"]);
    let keys: Vec<(String, String)> = doc["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["claim_id"].as_str().unwrap().into(), r["subject"].as_str().unwrap().into()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn bad_input_exits_2() {
    assert_eq!(charvar(&["--bogus"]).status.code(), Some(2));
    assert_eq!(charvar(&["twobridge", "--p", "8", "--m", "3"]).status.code(), Some(2));
    assert_eq!(charvar(&["trace", "--word", "a c"]).status.code(), Some(2));
}
