//! End-to-end tests of the binary: flag grammar, output schemas, exit codes.

use std::process::{Command, Output};

fn nsgp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsgp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = nsgp(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn invariants_json_schema_and_values() {
    let out = stdout(&["invariants", "--sgp", "12,13,14,15", "--json"]);
    assert_eq!(out.trim(), r#"{"m":12,"F":47,"g":26,"e":4,"n":22,"c":48}"#);
    let text = stdout(&["invariants", "--sgp", "4,5"]);
    assert_eq!(text.trim(), "m=4 F=11 g=6 e=2 n=6 c=12");
}

#[test]
fn quotient_text_and_round_trip() {
    assert_eq!(
        stdout(&["quotient", "--sgp", "3,5", "--d", "2"]).trim(),
        "3,4,5"
    );
    // emitted text parses back to the same semigroup
    let text = stdout(&["quotient", "--sgp", "12,13,14,15", "--d", "3"]);
    assert_eq!(
        stdout(&["invariants", "--sgp", text.trim()]).trim(),
        "m=4 F=11 g=6 e=2 n=6 c=12"
    );
    let json = stdout(&["quotient", "--sgp", "3,5", "--d", "2", "--json"]);
    assert_eq!(json.trim(), r#"{"msg":[3,4,5],"frobenius":2,"genus":2}"#);
}

#[test]
fn multiple_reports_match() {
    let out = stdout(&["multiple", "--delta", "4,5", "--d", "3", "--a", "4"]);
    assert!(out.contains("msg=12,13,14,15"));
    assert!(out.contains("predicted: m=12 F=47 g=26 e=4 n=22 c=48"));
    assert!(out.trim().ends_with("MATCH"));
}

#[test]
fn fiber_enum_json_lines() {
    let out = stdout(&[
        "fiber-enum",
        "--delta",
        "3,4,5",
        "--d",
        "2",
        "--bound",
        "11",
        "--json",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines.contains(
        &r#"{"msg":[6,7,8,9,10],"relative_msg":[7,9],"rank":2,"frobenius":11,"genus":6}"#
    ));
    assert!(
        lines.contains(&r#"{"msg":[3,5],"relative_msg":[3,5],"rank":2,"frobenius":7,"genus":4}"#)
    );
    // each line is one valid JSON record
    for line in &lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("msg").is_some() && v.get("rank").is_some());
    }
}

#[test]
fn byte_identical_reruns() {
    let args = [
        "fiber-enum",
        "--delta",
        "3,4,5",
        "--d",
        "2",
        "--bound",
        "11",
        "--json",
    ];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["presentation", "--sgp", "5,7,9", "--json"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn rank_and_fiber_check() {
    let out = stdout(&[
        "rank",
        "--delta",
        "3,4,5",
        "--d",
        "2",
        "--sgp",
        "6,7,8,9,10",
    ]);
    assert_eq!(out.trim(), "rank=2 relative_msg=7,9 mu=7 e=5 absorbed=");
    let out = stdout(&[
        "rank", "--delta", "3,4,5", "--d", "2", "--sgp", "3,5", "--json",
    ]);
    assert_eq!(
        out.trim(),
        r#"{"rank":2,"relative_msg":[3,5],"mu":3,"e":2,"absorbed":[3,4,5]}"#
    );
    let out = stdout(&[
        "fiber-check",
        "--delta",
        "3,4,5",
        "--d",
        "2",
        "--sgp",
        "6,7,8,9,10",
    ]);
    assert!(out.contains("rank=2"));
}

#[test]
fn apery_pf_depth_wilf() {
    assert_eq!(
        stdout(&["apery", "--sgp", "4,5", "--x", "4"]).trim(),
        "base=4 reps=0,5,10,15"
    );
    assert_eq!(
        stdout(&["apery", "--sgp", "3,4,5"]).trim(),
        "base=3 reps=0,4,5"
    );
    // reduction along a quotient
    assert_eq!(
        stdout(&["apery", "--sgp", "12,13,14,15", "--x", "12", "--d", "3"]).trim(),
        "base=4 reps=0,5,10,15"
    );
    assert_eq!(
        stdout(&["pf", "--sgp", "3,4,5"]).trim(),
        "pf=1,2 type=2 symmetric=false"
    );
    assert_eq!(
        stdout(&["pf", "--sgp", "4,5", "--json"]).trim(),
        r#"{"pf":[11],"type":1,"symmetric":true}"#
    );
    assert_eq!(stdout(&["depth", "--sgp", "4,5"]).trim(), "depth=3");
    assert_eq!(
        stdout(&["wilf", "--sgp", "3,4,5"]).trim(),
        "margin=0 holds=true"
    );
    assert_eq!(
        stdout(&["wilf", "--delta", "4,5", "--d", "3", "--a", "4"]).trim(),
        "lhs=40 terms=0,36,4"
    );
}

#[test]
fn presentation_modes() {
    let json = stdout(&["presentation", "--sgp", "4,5", "--json"]);
    assert_eq!(
        json.trim(),
        r#"{"generators":[4,5],"relations":[[[0,4],[5,0]]]}"#
    );
    let lifted = stdout(&[
        "presentation",
        "--delta",
        "5,7,9",
        "--d",
        "4",
        "--a",
        "9",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(lifted.trim()).unwrap();
    assert_eq!(v["generators"], serde_json::json!([20, 28, 36, 37, 38, 39]));
}

#[test]
fn max_rank_subcommand() {
    let out = stdout(&["max-rank", "--delta", "3,4,5", "--d", "2"]);
    assert_eq!(
        out.trim(),
        "bound=3 msg=6,7,8,9,10,11 relative_msg=7,9,11 rank=3"
    );
}

#[test]
fn oracle_cross_checks_pass() {
    for args in [
        &["invariants", "--sgp", "6,8,10,7,9", "--oracle"][..],
        &["quotient", "--sgp", "12,13,14,15", "--d", "3", "--oracle"],
        &["pf", "--sgp", "3,8,10", "--oracle"],
        &["apery", "--sgp", "5,7,9", "--x", "7", "--oracle"],
        &[
            "rank-one", "--delta", "4,5", "--d", "3", "--x", "5", "--oracle",
        ],
        &[
            "fiber-enum",
            "--delta",
            "3,5",
            "--d",
            "2",
            "--bound",
            "20",
            "--oracle",
        ],
    ] {
        let out = nsgp(args);
        assert!(out.status.success(), "oracle run failed for {args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(
            err.contains("oracle:"),
            "missing verdict for {args:?}: {err}"
        );
        assert!(
            !err.contains("MISMATCH"),
            "unexpected mismatch for {args:?}"
        );
    }
}

#[test]
fn domain_errors_exit_one_with_machine_line() {
    let out = nsgp(&["invariants", "--sgp", "4,6"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.starts_with("error: not_coprime:"), "got: {err}");

    let out = nsgp(&["pf", "--sgp", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: is_n:"));

    let out = nsgp(&["fiber-check", "--delta", "4,5", "--d", "3", "--sgp", "4,5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: wrong_quotient:"));

    let out = nsgp(&["invariants", "--sgp", "4,x"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: parse_error:"));

    let out = nsgp(&["multiple", "--delta", "4,5", "--d", "3", "--a", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: invalid_a:"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["invariants"][..],
        &["quotient", "--sgp", "4,5"],
        &["presentation"],
        &["wilf", "--delta", "4,5"],
        &["no-such-command"],
    ] {
        let out = nsgp(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "expected usage error for {args:?}"
        );
    }
}

#[test]
fn seed_does_not_change_results() {
    let a = nsgp(&[
        "fiber-enum",
        "--delta",
        "4,5",
        "--d",
        "2",
        "--bound",
        "40",
        "--json",
        "--oracle",
        "--seed",
        "1",
    ]);
    let b = nsgp(&[
        "fiber-enum",
        "--delta",
        "4,5",
        "--d",
        "2",
        "--bound",
        "40",
        "--json",
        "--oracle",
        "--seed",
        "99",
    ]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}
