//! End-to-end checks against the compiled binary: exit codes and output
//! formats as a shell user would see them.

use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_clifford-cpt"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

#[test]
fn verify_gamma_exits_zero() {
    let (code, stdout, _) = run(&["verify-gamma"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("25/25"));
}

#[test]
fn generate_reports_group_invariants() {
    let (code, stdout, _) = run(&["generate", "--p", "1", "--q", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["order"], 64);
}

#[test]
fn diff_against_shipped_references_is_clean() {
    let base = concat!(env!("CARGO_MANIFEST_DIR"), "/reference");
    for (set, file) in [("dt", "dt_table.csv"), ("ext", "ext_table.csv")] {
        let (code, stdout, _) = run(&[
            "diff",
            "--set",
            set,
            "--reference",
            &format!("{base}/{file}"),
        ]);
        assert_eq!(code, 0, "set {set}: {stdout}");
        assert!(stdout.contains("agree"));
    }
}

#[test]
fn table_csv_round_trips_through_diff_input_format() {
    let (code, stdout, _) = run(&["table", "--set", "dt", "--format", "csv"]);
    assert_eq!(code, 0);
    let expected = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/reference/dt_table.csv"
    ))
    .unwrap();
    assert_eq!(stdout.trim(), expected.trim());
}

#[test]
fn solve_lists_both_pattern_solutions() {
    let (code, stdout, _) = run(&["solve", "--pattern", "++-+-", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("g24") && stdout.contains("g013"));
}

#[test]
fn salingaros_verifies() {
    let (code, stdout, _) = run(&["salingaros"]);
    assert_eq!(code, 0, "stdout: {stdout}");
}

#[test]
fn usage_errors_exit_two() {
    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["solve", "--pattern", "++*+-"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["diff", "--set", "dt", "--reference", "/nonexistent.csv"]);
    assert_eq!(code, 2);
}

#[test]
fn iso_exit_codes_reflect_verification() {
    let (code, _, _) = run(&["iso", "--left", "ext", "--right", "ext"]);
    assert_eq!(code, 0);
    let (code, _, _) = run(&["iso", "--left", "dt", "--right", "ext"]);
    assert_eq!(code, 1);
}
