use std::io::Write;
use std::process::{Command, Output, Stdio};

use pword::powers::PowerProfile;
use pword::search::SearchResult;
use pword::verify::VerificationReport;

fn pword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pword"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Parses JSON into `T` and checks that re-serializing gives the same text.
fn round_trip<T: serde::de::DeserializeOwned + serde::Serialize>(text: &str) -> T {
    let value: T = serde_json::from_str(text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text);
    value
}

#[test]
fn analyze_json() {
    let o = pword(&["--json", "analyze", ".aba"]);
    assert_eq!(o.status.code(), Some(0));
    let p: PowerProfile = round_trip(&stdout(&o));
    assert_eq!(p.spans(), [(1, 2), (1, 4)]);
    assert_eq!(p.unique_start, Some(1));
}

#[test]
fn analyze_accepts_diamond_holes_and_several_words() {
    let o = pword(&["--json", "analyze", "--r", "3", "◊◊aba◊baa", "aaa"]);
    assert_eq!(o.status.code(), Some(0));
    let ps: Vec<PowerProfile> = round_trip(&stdout(&o));
    assert_eq!(ps[0].word.to_string(), "..aba.baa");
    assert_eq!(ps[0].spans(), [(1, 3), (1, 6), (1, 9)]);
    assert_eq!(ps[1].spans(), [(1, 3)]);
}

#[test]
fn analyze_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pword"))
        .args(["analyze", "--stdin"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"aaaa\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("starts    1 2 3"), "{}", stdout(&o));
}

#[test]
fn parse_errors_name_the_position() {
    let o = pword(&["analyze", "ab#a"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 3"), "{}", stderr(&o));

    let o = pword(&["analyze", "--alphabet", "2", "abc"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("position 3"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(pword(&["analyze", "--r", "1", "aa"]).status.code(), Some(2));
    assert_eq!(pword(&["construct", "prop3", "--r", "5"]).status.code(), Some(2));
    assert_eq!(pword(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn construct_outputs() {
    let o = pword(&["construct", "square-chain", "--k", "3"]);
    assert_eq!(stdout(&o).trim(), ".abacaba");
    let o = pword(&["construct", "cube-examples"]);
    assert_eq!(stdout(&o), "..aba.baa\n..aba.ba.\n");
    let o = pword(&["construct", "prop3", "--r", "5", "--unchecked"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("....aba...baa.."));
}

#[test]
fn verify_pass_exits_0() {
    let o = pword(&["--json", "verify", "theorem-sq", "--k", "2", "--max-len", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let r: VerificationReport = round_trip(&stdout(&o));
    assert!(r.passed());
    assert!(r.counterexample.is_none());
}

#[test]
fn verify_fail_exits_1_with_counterexample() {
    let o = pword(&["--json", "verify", "construction", "--name", "prop3", "--r", "5", "--unchecked"]);
    assert_eq!(o.status.code(), Some(1));
    let r: VerificationReport = round_trip(&stdout(&o));
    assert_eq!(r.counterexample.unwrap().word.to_string(), "....aba...baa..");

    let o = pword(&["verify", "construction", "--name", "prop3", "--r", "5", "--unchecked"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert!(stdout(&o).contains("counterexample: ....aba...baa.."));
}

#[test]
fn verify_over_budget_exits_2() {
    let o = pword(&["--budget", "10", "verify", "fine-wilf", "--k", "2", "--max-len", "30"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("budget"));
}

#[test]
fn search_json() {
    let o = pword(&["--json", "search", "--r", "2", "--k", "2", "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let s: SearchResult = round_trip(&stdout(&o));
    assert_eq!(s.best_count, 2);
    assert!(s.exhaustive);
    assert!(s.witnesses.iter().any(|w| w.to_string() == ".aba"));
}

#[test]
fn search_out_of_budget_still_prints_a_lower_bound() {
    let o = pword(&["--json", "--budget", "5", "search", "--r", "2", "--k", "3", "--max-len", "8"]);
    assert_eq!(o.status.code(), Some(2));
    let s: SearchResult = round_trip(&stdout(&o));
    assert!(!s.exhaustive);
}

#[test]
fn search_table_csv() {
    let o = pword(&[
        "search", "table", "--r-min", "2", "--r-max", "3", "--k-min", "2", "--k-max", "2",
        "--max-len", "9", "--csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "r,k,best,exhaustive,known,status,nodes,witness");
    assert!(lines[1].starts_with("2,2,2,true,=2,matches,"), "{}", lines[1]);
    assert!(lines[2].starts_with("3,2,3,true,>=3,matches,"), "{}", lines[2]);
}
