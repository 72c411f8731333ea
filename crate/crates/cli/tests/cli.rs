use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const GOLDEN: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");

fn ogf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ogf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8")
}

fn spec_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(GOLDEN).join(name)).unwrap()
}

const FIB: &str = "P = [\"-1\", \"-1\"]\nQ = [\"0\", \"1\"]\nN = 8\n";

#[test]
fn expand_csv_fibonacci() {
    let f = spec_file(FIB);
    let o = ogf(&["expand", "--spec", path(&f), "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,value\n0,0\n1,1\n2,1\n3,2\n4,3\n5,5\n6,8\n7,13\n8,21\n");
}

#[test]
fn expand_json_matches_golden_and_parses() {
    let f = spec_file(FIB);
    let o = ogf(&["expand", "--spec", path(&f), "--json"]);
    assert_eq!(stdout(&o), golden("fibonacci.json"));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let values: Vec<&str> = rows.as_array().unwrap().iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(values, ["0", "1", "1", "2", "3", "5", "8", "13", "21"]);
    assert_eq!(rows[8]["n"], 8);
}

#[test]
fn expand_polynomial_and_eval() {
    let f = spec_file("P = [\"-x1\", \"-1\"]\nQ = [\"0\", \"1\"]\nN = 4\n");
    let o = ogf(&["expand", "--spec", path(&f)]);
    assert_eq!(stdout(&o), "S_0 = 0\nS_1 = 1\nS_2 = x1\nS_3 = x1^2 + 1\nS_4 = x1^3 + 2*x1\n");
    let f = spec_file("P = [\"-x1\", \"-1\"]\nQ = [\"0\", \"1\"]\nN = 4\n[eval]\nx1 = \"2\"\n");
    let o = ogf(&["expand", "--spec", path(&f), "--csv"]);
    assert_eq!(stdout(&o), "n,value\n0,0\n1,1\n2,2\n3,5\n4,12\n");
}

#[test]
fn expand_is_byte_for_byte_deterministic() {
    let f = spec_file("P = [\"x2 - 3*x1\", \"1/2\", \"x1*x3\"]\nbeta = \"3/2\"\nN = 6\n");
    let a = ogf(&["expand", "--spec", path(&f)]);
    let b = ogf(&["expand", "--spec", path(&f)]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn expand_reports_positions() {
    let f = spec_file("P = [\"-1\",\n  \"2x1\"]\n");
    let o = ogf(&["expand", "--spec", path(&f)]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    let o = ogf(&["expand", "--spec", "/definitely/not/here.toml"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn binet_shows_decomposition() {
    let o = ogf(&["binet", "--p1", "-1", "--p2", "-1", "--q0", "0", "--q1", "1", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("D = 5\n"), "{s}");
    assert!(s.contains("S_7 = 13 + 0*sqrt(5)\n"), "{s}");
    assert!(s.contains("series value = 13\n"), "{s}");
    let o = ogf(&["binet", "--p1", "-2", "--p2", "-1", "--n", "4"]);
    assert!(stdout(&o).contains("Y_4 = 29 + 0*sqrt(8)"), "{}", stdout(&o));
}

#[test]
fn binet_rejects_repeated_root() {
    let o = ogf(&["binet", "--p1", "-2", "--p2", "1", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(ogf(&[]).status.code(), Some(2));
    assert_eq!(ogf(&["expand"]).status.code(), Some(2));
    assert_eq!(ogf(&["verify", "--suite", "bogus"]).status.code(), Some(2));
    assert_eq!(ogf(&["binet", "--p1", "1", "--p2", "1", "--q0", "1", "--n", "2"]).status.code(), Some(2));
    assert_eq!(ogf(&["catalog", "eval", "--name", "pell", "--n-range", "5..2"]).status.code(), Some(2));
}

#[test]
fn catalog_eval_pell() {
    let o = ogf(&["catalog", "eval", "--name", "pell", "--n-range", "0..5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 1 2 5 12 29\n");
}

#[test]
fn catalog_eval_params_and_formats() {
    let o = ogf(&["catalog", "eval", "--name", "jgonal", "--params", "j=5", "--n-range", "1..4", "--csv"]);
    assert_eq!(stdout(&o), "n,value\n1,1\n2,5\n3,12\n4,22\n");
    let o = ogf(&["catalog", "eval", "--name", "humbert", "--params", "m=2", "beta=1/2", "--n-range", "0..2"]);
    assert_eq!(stdout(&o), "1 x1 3/2*x1^2 - 1/2\n");
    let o = ogf(&["catalog", "eval", "--name", "fibonacci_order_m", "--params", "m=1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ogf(&["catalog", "eval", "--name", "pell", "--params", "zz=1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ogf(&["catalog", "eval", "--name", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_corrected_entries() {
    let o = ogf(&["catalog", "eval", "--name", "centered_octahedron", "--n-range", "0..4"]);
    assert_eq!(stdout(&o), "0 1 7 25 63\n");
    let o = ogf(&["catalog", "eval", "--name", "centered_octahedron", "--n-range", "0..4", "--corrected"]);
    assert_eq!(stdout(&o), "1 7 25 63 129\n");
    let o = ogf(&["catalog", "eval", "--name", "pell", "--corrected"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn catalog_list_matches_golden() {
    let o = ogf(&["catalog", "list"]);
    assert_eq!(stdout(&o), golden("catalog_list.txt"));
}

#[test]
fn transform_euler_and_inverse() {
    let f = spec_file("P = [\"-1\", \"-1\"]\nQ = [\"0\", \"1\"]\nN = 6\n");
    let o = ogf(&["transform", "euler", "--theta", "1", "--spec", path(&f), "--csv"]);
    // binomial transform of F_n is F_(2n)
    assert_eq!(stdout(&o), "n,value\n0,0\n1,1\n2,3\n3,8\n4,21\n5,55\n6,144\n");
    let g = spec_file("P = [\"-3\", \"1\"]\nQ = [\"0\", \"1\"]\nN = 6\n");
    let o = ogf(&["transform", "euler", "--theta", "1", "--inverse", "--spec", path(&g), "--csv"]);
    assert_eq!(stdout(&o), "n,value\n0,0\n1,1\n2,1\n3,2\n4,3\n5,5\n6,8\n");
}

#[test]
fn transform_lambert() {
    let o = ogf(&["transform", "lambert", "--x", "1/2", "--tol", "1/10000000000000000"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let v: f64 = s.lines().next().unwrap().split('=').nth(1).unwrap().trim().parse().unwrap();
    assert!((v - 1.606_695_152_415_291_8).abs() < 1e-12, "{s}");
    let o = ogf(&["transform", "lambert", "--x", "3/2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_euler_passes() {
    let o = ogf(&["verify", "--suite", "euler"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("PASS     euler.antichain_transform"), "{s}");
    assert!(!s.contains("FAIL"), "{s}");
}

#[test]
fn verify_all_flag_list_matches_golden() {
    let o = ogf(&["verify", "--suite", "all", "--quiet"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    let flagged: Vec<&str> = s
        .lines()
        .filter(|l| l.starts_with("FLAGGED"))
        .map(|l| l.split_whitespace().nth(1).unwrap().trim_end_matches(':'))
        .collect();
    let expected: Vec<&str> = golden("flagged.txt").leak().lines().collect();
    assert_eq!(flagged, expected);
    assert!(!s.lines().any(|l| l.starts_with("FAIL")), "{s}");
}

#[test]
fn verify_output_is_stable_across_runs() {
    let a = ogf(&["verify", "--suite", "recurrence", "--n-max", "8", "--samples", "5"]);
    let b = ogf(&["verify", "--suite", "recurrence", "--n-max", "8", "--samples", "5"]);
    assert_eq!(a.stdout, b.stdout);
}
