use std::process::{Command, Output};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

fn euler_adic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_euler-adic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = euler_adic(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn rational(s: &str) -> BigRational {
    let (n, d) = s.split_once('/').unwrap();
    BigRational::new(n.parse::<BigInt>().unwrap(), d.parse::<BigInt>().unwrap())
}

#[test]
fn table_csv() {
    let out = stdout(&["table", "--p", "0", "--q", "0", "--imax", "2", "--jmax", "2"]);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "i,j,count");
    assert_eq!(lines.len(), 10);
    assert!(lines.contains(&"1,1,4"));
    assert!(lines.contains(&"2,2,66"));
}

#[test]
fn table_json_keeps_big_counts_exact() {
    let out = stdout(&["table", "--p", "0", "--q", "0", "--imax", "15", "--jmax", "15", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["params"]["imax"], 15);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 256);
    let last = rows.last().unwrap();
    assert_eq!((last["i"].as_u64(), last["j"].as_u64()), (Some(15), Some(15)));
    // Eulerian number <31, 15>, far beyond f64 precision.
    assert_eq!(last["count"], "1999411100024544765835750654805760");
}

#[test]
fn good_root_example() {
    assert_eq!(stdout(&["good", "--p", "0", "--q", "0", "--i", "1", "--j", "1"]), "G=2 A=4 G/A=1/2\n");
    let dp = stdout(&["good", "--p", "1", "--q", "2", "--i", "4", "--j", "3"]);
    let en = stdout(&["good", "--p", "1", "--q", "2", "--i", "4", "--j", "3", "--method", "enum"]);
    assert_eq!(dp, en);
}

#[test]
fn converge_final_row() {
    let out = stdout(&["converge", "--p", "1", "--q", "0", "--diag", "40", "--step", "10"]);
    let rows: Vec<Vec<&str>> = out.lines().skip(1).map(|l| l.split(',').collect()).collect();
    assert_eq!(out.lines().next(), Some("k,ratio,target,gap"));
    let ks: Vec<_> = rows.iter().map(|r| r[0]).collect();
    assert_eq!(ks, ["10", "20", "30", "40"]);
    let last = rows.last().unwrap();
    assert_eq!(last[2], "1/2");
    assert!(rational(last[3]) < rational("1/1000"));
    let ratio = rational(last[1]);
    assert_eq!((ratio - rational("1/2")).abs(), rational(last[3]));
}

#[test]
fn converge_decimal_columns() {
    let out = stdout(&["converge", "--p", "0", "--q", "1", "--diag", "10", "--step", "5", "--decimal"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k,ratio,target,gap,ratio_decimal,gap_decimal"));
    let row: Vec<_> = lines.last().unwrap().split(',').collect();
    assert_eq!(row.len(), 6);
    assert!(row[4].starts_with("5.0578173917838"), "{}", row[4]);
}

#[test]
fn encode_decode_round_trip() {
    let code = stdout(&["encode", "--path", "(0,0):H1,V2"]);
    assert_eq!(code, "n=0;s1,v1\n");
    let path = stdout(&["decode", "--base", "0,0", "--code", code.trim()]);
    assert_eq!(path, "(0,0):H1,V2\n");
}

#[test]
fn transport_prints_path_and_code() {
    let from = "(1,0):H1,V1,V2,H1,H1,V1,V1";
    let out = stdout(&["transport", "--from", "1,0", "--to", "0,1", "--path", from]);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("(0,1):"));
    assert!(lines[1].starts_with("n=1;"));
    let back = stdout(&["transport", "--from", "0,1", "--to", "1,0", "--path", lines[0]]);
    assert_eq!(back.lines().next(), Some(from));
}

#[test]
fn orbit_streams_every_path() {
    let out = stdout(&["orbit", "--vertex", "1,1"]);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|l| l.starts_with("(0,0):")));
    let unique: std::collections::HashSet<_> = lines.iter().collect();
    assert_eq!(unique.len(), 4);
}

#[test]
fn verify_exit_codes() {
    let ok = euler_adic(&["verify", "--suite", "closedform", "--imax", "4", "--jmax", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = String::from_utf8(ok.stdout).unwrap();
    assert!(text.lines().all(|l| !l.starts_with("FAIL")));
    assert!(text.trim_end().ends_with("0 failed"));

    let starved = euler_adic(&["--max-enum", "10", "verify", "--suite", "recurrence"]);
    assert_eq!(starved.status.code(), Some(2));
}

#[test]
fn bijection_suite_reports_notes() {
    let out = stdout(&["verify", "--suite", "bijection", "--imax", "4", "--jmax", "4", "--nmax", "1"]);
    assert!(out.lines().any(|l| l.starts_with("NOTE level 1")));
    assert!(out.lines().any(|l| l.starts_with("PASS bijection (1,0)->(0,1)")));
}

#[test]
fn usage_and_input_errors_exit_two() {
    for args in [
        &["table", "--p", "1"][..],
        &["decode", "--base", "0,0", "--code", "n=0;h1"],
        &["encode", "--path", "(0,0):H2"],
        &["good", "--p", "0", "--q", "0", "--i", "30", "--j", "30", "--method", "enum"],
    ] {
        let out = euler_adic(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["table", "--p", "2", "--q", "1", "--imax", "6", "--jmax", "6", "--format", "json"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["orbit", "--vertex", "2,3"];
    assert_eq!(stdout(&args), stdout(&args));
}
