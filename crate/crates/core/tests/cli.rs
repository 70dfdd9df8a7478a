use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_claw-genus"))
        .args(args)
        .env_remove("CLAW_GENUS_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn assert_round_trips(s: &str) -> Value {
    let v: Value = serde_json::from_str(s).unwrap();
    let mut again = serde_json::to_string(&v).unwrap();
    again.push('\n');
    assert_eq!(again, s);
    v
}

#[test]
fn table_csv() {
    let o = run(&["table", "--max-n", "4", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "0,2,2,0,0,0,0\n1,0,40,24,0,0,0\n2,0,48,720,256,0,0\n3,0,0,1920,11648,2816,0\n4,0,0,1152,52608,177664,30720\n"
    );
}

#[test]
fn table_single_row() {
    let o = run(&["table", "--max-n", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n | 0 1\n0 | 2 2\n");
}

#[test]
fn table_extended_json() {
    let o = run(&["table", "--max-n", "6", "--format", "json"]);
    assert!(o.status.success());
    let v = assert_round_trips(&stdout(&o));
    let row5: Vec<u64> = v["rows"][5]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    assert_eq!(row5, [0, 0, 0, 69120, 1190400, 2598912, 335872]);
    assert_eq!(v["rows"][6]["coefficients"][6], 36872192);
}

#[test]
fn compute_csv_row() {
    let o = run(&[
        "compute",
        "--n",
        "4",
        "--route",
        "recurrence",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "4,0,0,1152,52608,177664,30720\n");
}

#[test]
fn compute_all_routes_agree() {
    let o = run(&["compute", "--n", "0..2", "--route", "all"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out
        .lines()
        .all(|l| l.contains("AGREE") && !l.contains("DISAGREE")));
    assert!(out.starts_with("n=0 AGREE [pgd, recurrence, explicit, gf, oracle]"));
}

#[test]
fn compute_all_json_skips_oracle_beyond_cap() {
    let o = run(&["compute", "--n-range", "3..6", "--format", "json"]);
    assert!(o.status.success());
    assert!(stderr(&o).contains("oracle route skipped"));
    let v = assert_round_trips(&stdout(&o));
    assert_eq!(v["results"][1]["routes"].as_array().unwrap().len(), 5);
    assert_eq!(v["results"][2]["routes"].as_array().unwrap().len(), 4);
    assert!(v["results"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["agree"] == true));
}

#[test]
fn compute_oracle_row_three() {
    let o = run(&[
        "compute", "--n", "3", "--route", "oracle", "--format", "csv",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3,0,0,1920,11648,2816\n");
}

#[test]
fn oracle_cap_refusal_and_override() {
    let o = run(&["compute", "--n", "5", "--route", "oracle"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("4194304 rotation systems"));
    assert!(stdout(&o).is_empty());

    let o = Command::new(env!("CARGO_BIN_EXE_claw-genus"))
        .args(["oracle-check", "--n", "2", "--format", "csv"])
        .env("CLAW_GENUS_ORACLE_CAP", "1")
        .output()
        .unwrap();
    assert!(!o.status.success());

    let o = run(&[
        "oracle-check",
        "--n",
        "2",
        "--oracle-cap",
        "1",
        "--acknowledge-cost",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "2,a,0,48,192\n2,b,0,0,480\n2,c,0,0,48,256\n");
}

#[test]
fn oracle_check_json() {
    let o = run(&[
        "oracle-check",
        "--n",
        "0..1",
        "--format",
        "json",
        "--parallelism",
        "2",
    ]);
    assert!(o.status.success());
    let v = assert_round_trips(&stdout(&o));
    let y1 = &v["results"][1];
    assert_eq!(y1["a"], serde_json::json!([0, 16]));
    assert_eq!(y1["b"], serde_json::json!([0, 24]));
    assert_eq!(y1["c"], serde_json::json!([0, 0, 24]));
    assert_eq!(y1["total"], 64);
    assert_eq!(y1["matches_pgd"], true);
}

#[test]
fn certify_two() {
    let o = run(&["certify", "--n", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with(
        "n=2: real-rooted ✓ (2 intervals), interlace(n-1) ✓, interlace(n-2) ✓, log-concave ✓\n"
    ));
    assert!(out.contains("-2.744173414e0, -6.832658571e-2"));
}

#[test]
fn certify_one_json() {
    let o = run(&["certify", "--n", "1", "--format", "json", "--approx"]);
    assert!(o.status.success());
    let v = assert_round_trips(&stdout(&o));
    let roots = &v["certificates"][0]["roots"];
    assert_eq!(roots["degree"], 1);
    assert_eq!(roots["complete"], true);
    let iv: Vec<i64> = roots["intervals"][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect();
    // lo < -5/3 <= hi
    assert!(iv[0] * 3 < -5 * iv[1] && -5 * iv[3] <= iv[2] * 3);
    assert_eq!(roots["approx"][0], "-1.666666667e0");
    assert!(stderr(&o).starts_with("n=1: real-rooted ✓"));
}

#[test]
fn certify_range_all_pass() {
    let o = run(&["certify", "--n", "0..10"]);
    assert!(o.status.success());
    let summaries: Vec<_> = stdout(&o)
        .lines()
        .filter(|l| l.starts_with("n="))
        .map(String::from)
        .collect();
    assert_eq!(summaries.len(), 11);
    assert!(summaries.iter().all(|l| !l.contains('✗')));
}

#[test]
fn certify_refinement_cap_can_leave_pairs_undecided() {
    let o = run(&[
        "certify",
        "--n",
        "12",
        "--max-refine",
        "0",
        "--format",
        "json",
    ]);
    let v = assert_round_trips(&stdout(&o));
    let c = &v["certificates"][0];
    let undecided = ["interlace_consecutive", "interlace_skip"]
        .iter()
        .any(|k| c[k]["outcome"]["status"] == "undecided");
    assert_eq!(o.status.success(), !undecided);
    assert_eq!(c["summary"]["passed"], o.status.success());
}

#[test]
fn bad_arguments() {
    assert!(!run(&["compute", "--n", "5..2"]).status.success());
    assert!(!run(&["compute", "--n", "x"]).status.success());
    assert!(!run(&["compute", "--route", "nope"]).status.success());
    let help = run(&["--help"]);
    let text = stdout(&help);
    for cmd in ["compute", "certify", "table", "oracle-check"] {
        assert!(text.contains(cmd));
    }
    let help = stdout(&run(&["compute", "--help"]));
    for flag in [
        "--n",
        "n-range",
        "--route",
        "--format",
        "--parallelism",
        "--acknowledge-cost",
        "CLAW_GENUS_ORACLE_CAP",
    ] {
        assert!(help.contains(flag), "{flag}");
    }
    assert!(stdout(&run(&["certify", "--help"])).contains("--max-refine"));
}
