//! End-to-end tests of the `mtz` binary: golden stdout, exit codes, and
//! JSON round-trips back into the library types.

use std::process::{Command, Output};

use tangentzeta::{reduce_to_monotangents, CheckReport, Index};

fn mtz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mtz"))
        .args(args)
        .output()
        .expect("failed to spawn mtz")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout not utf-8")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("terminated by signal")
}

#[test]
fn mzv_eval_goldens() {
    let out = mtz(&["mzv", "eval", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("1.6449340668"), "{}", stdout_of(&out));

    let out = mtz(&["mzv", "eval", "1,2"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("1.2020569031"), "{}", stdout_of(&out));
}

#[test]
fn exit_codes() {
    // divergent index -> 3
    assert_eq!(exit_code(&mtz(&["mzv", "eval", "2,1"])), 3);
    // unparseable index -> 2
    assert_eq!(exit_code(&mtz(&["mzv", "eval", "abc"])), 2);
    // unparseable z -> 2
    assert_eq!(exit_code(&mtz(&["mtgf", "eval", "2", "--z", "0.3,q"])), 2);
    // pole -> 4
    assert_eq!(exit_code(&mtz(&["mtgf", "eval", "2", "--z", "1"])), 4);
    // inadmissible index for a multitangent check -> 3
    assert_eq!(exit_code(&mtz(&["check", "main", "--k", "1,3"])), 3);
    // unknown flag -> 2 (argument parsing)
    assert_eq!(exit_code(&mtz(&["mzv", "eval", "2", "--bogus"])), 2);
    // bad configuration -> 3
    assert_eq!(exit_code(&mtz(&["mzv", "eval", "2", "--prec", "5.0"])), 3);
}

#[test]
fn reduce_golden_stdout() {
    let out = mtz(&["mtgf", "reduce", "2,3"]);
    assert_eq!(exit_code(&out), 0);
    let stdout = stdout_of(&out);
    let first = stdout.lines().next().unwrap();
    assert_eq!(first, "Ψ_{2,3}(z) = 3·ζ(3)·Ψ_2 + ζ(2)·Ψ_3");
    // the numeric flattening follows on the second line
    assert!(stdout.lines().nth(1).unwrap().contains("3.60617070947878"));
}

#[test]
fn reduce_json_round_trips() {
    let out = mtz(&["mtgf", "reduce", "2,3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(v["index"], "2,3");
    let parsed = tangentzeta::MonotangentCombination::from_json(&v["combination"]).unwrap();
    let expected = reduce_to_monotangents(&"2,3".parse::<Index>().unwrap()).unwrap();
    assert_eq!(parsed, expected);
}

#[test]
fn eval_golden_value() {
    // Ψ_2(1/4) = 2π²
    let out = mtz(&["mtgf", "eval", "2", "--z", "0.25"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).contains("19.7392088"), "{}", stdout_of(&out));
}

#[test]
fn eval_oracle_agreement_is_reported() {
    let out = mtz(&[
        "mtgf",
        "eval",
        "2,3",
        "--z",
        "0.3",
        "--oracle",
        "--oracle-cutoff",
        "20000",
        "--format",
        "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    let difference = v["oracle"]["difference"].as_f64().unwrap();
    let bound = v["oracle"]["tail_bound"].as_f64().unwrap();
    assert!(difference < bound, "difference {difference} vs bound {bound}");
}

#[test]
fn check_commands_emit_reports() {
    let out = mtz(&["check", "kawashima", "--k", "2", "--l", "2", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let report =
        CheckReport::from_json(&serde_json::from_str(stdout_of(&out).trim()).unwrap()).unwrap();
    assert!(report.passed);
    assert!(report.residual < 1e-10);

    let out = mtz(&["check", "main", "--k", "2,3"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_of(&out).starts_with("PASS multitangent_formula"));
}

#[test]
fn suite_csv_has_expected_shape() {
    let out = mtz(&["check", "suite", "--weight-cap", "2", "--format", "csv"]);
    assert_eq!(exit_code(&out), 0);
    let stdout = stdout_of(&out);
    let mut lines = stdout.lines();
    assert_eq!(lines.next().unwrap(), CheckReport::CSV_HEADER);
    let mut rows = 0;
    for line in lines {
        assert!(line.contains(",true,"), "unexpected row: {line}");
        rows += 1;
    }
    assert!(rows > 0);
}

#[test]
fn suite_json_lines_reparse() {
    let out = mtz(&["check", "suite", "--weight-cap", "3", "--format", "json"]);
    assert_eq!(exit_code(&out), 0);
    let stdout = stdout_of(&out);
    let mut seen = 0;
    for line in stdout.lines() {
        let report =
            CheckReport::from_json(&serde_json::from_str(line).unwrap()).unwrap();
        assert!(report.passed, "{report}");
        seen += 1;
    }
    assert!(seen > 30, "only {seen} reports");
}
