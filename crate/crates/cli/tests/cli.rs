//! End-to-end runs of the `cliffgen` binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffgen")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn octonion_products() {
    let o = run(&["octonion", "--mul", "(i*j)*l"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "kl\n");
    assert_eq!(stdout(&run(&["octonion", "--mul", "i*(j*l)"])), "-kl\n");
    assert_eq!(stdout(&run(&["octonion", "--split", "--mul", "e*e"])), "1\n");
}

#[test]
fn octonion_table_has_header_and_seven_rows() {
    let out = stdout(&run(&["octonion", "--table"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[1].trim_start().starts_with("i"));
    assert!(lines[0].contains("kl"));
}

#[test]
fn bad_expression_is_a_usage_error() {
    assert_eq!(run(&["octonion", "--mul", "i*q"]).status.code(), Some(2));
    assert_eq!(run(&["octonion"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = run(&["verify", "2", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("5/5 checks passed"));
    // Definite signatures keep a nonzero basis norm.
    let definite = run(&["verify", "0", "3"]);
    assert_eq!(definite.status.code(), Some(1));
    assert!(stdout(&definite).contains("FAIL spinor norm"));
    assert_eq!(run(&["verify", "99", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--all", "--max-n", "40"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "1"]).status.code(), Some(2));
}

#[test]
fn verify_all_small_is_deterministic_across_modes() {
    let par = run(&["verify", "--all", "--max-n", "4"]);
    let seq = run(&["verify", "--all", "--max-n", "4", "--sequential"]);
    assert_eq!(stdout(&par), stdout(&seq));
    assert!(stdout(&par).contains("signatures passed"));
}

#[test]
fn repr_json_is_well_formed() {
    let o = run(&["repr", "1", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid json");
    assert_eq!(v["schema"], "cliffgen/1");
    assert_eq!(v["ring"], "H");
    assert_eq!(v["dim"], 2);
    assert_eq!(v["generators"].as_array().map(Vec::len), Some(4));
    assert_eq!(stdout(&o), stdout(&run(&["repr", "1", "3", "--format", "json"])));
}

#[test]
fn repr_text_and_latex() {
    let text = stdout(&run(&["repr", "0", "1"]));
    assert!(text.contains("ring: C"));
    assert!(text.contains("gamma1:"));
    let latex = stdout(&run(&["repr", "0", "3", "--format", "latex"]));
    assert!(latex.contains("\\begin{bmatrix}"));
    assert!(latex.contains("\\hat{\\gamma}_{3}"));
}

#[test]
fn classify_lists_45_signatures() {
    let out = stdout(&run(&["classify"]));
    assert_eq!(out.lines().count(), 46);
    assert!(out.contains("(3,1)"));
    let table = run(&["classify", "--paper-table"]);
    assert_eq!(table.status.code(), Some(0));
    assert!(stdout(&table).contains("20/21 rows match"));
}

#[test]
fn spin_check_is_seeded() {
    let a = run(&["spin-check", "0", "3", "--samples", "20", "--seed", "7"]);
    let b = run(&["spin-check", "0", "3", "--samples", "20", "--seed", "7", "--sequential"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).ends_with("pass\n"));
}
