use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;
use wkpc::format::parse_scan_report;
use wkpc::Verdict;

fn wkpc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wkpc")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn squares_file(dir: &Path, variant: &str) -> PathBuf {
    let path = dir.join(format!("{variant}.pcwk"));
    let o = wkpc(&["builtin", "squares", "--variant", variant, "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    path
}

#[test]
fn check_reports_verdict_and_witness() {
    let dir = TempDir::new().unwrap();
    let sys = squares_file(dir.path(), "corrected");
    let sys = sys.to_str().unwrap();

    let o = wkpc(&["check", sys, "--word", "aaaa"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("ACCEPT\nwitness bbcc\nconfigs "), "{text}");

    let o = wkpc(&["check", sys, "--word", "aaa"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("REJECT\n"));

    let o = wkpc(&["check", sys, "--word", "-"]);
    assert_eq!(o.status.code(), Some(1));

    let o = wkpc(&["check", sys, "--word", "aaaa", "--engine", "bruteforce"]);
    assert_eq!(o.status.code(), Some(0));

    let o = wkpc(&["check", sys, "--word", "aaaaaaaaa", "--max-configs", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).starts_with("LIMIT\n"));
}

#[test]
fn trace_round_trips_through_validate_trace() {
    let dir = TempDir::new().unwrap();
    let sys = squares_file(dir.path(), "corrected");
    let sys = sys.to_str().unwrap();
    let trace = dir.path().join("run.trace");
    let trace = trace.to_str().unwrap();

    assert_eq!(wkpc(&["check", sys, "--word", "aaaaaaaaa", "--trace", trace]).status.code(), Some(0));
    let o = wkpc(&["validate-trace", sys, "--word", "aaaaaaaaa", "--trace", trace]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "valid\n"));

    let o = wkpc(&["validate-trace", sys, "--word", "aaaa", "--trace", trace]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("invalid: "));

    let tampered = fs::read_to_string(trace).unwrap().replacen("q4", "q3", 1);
    fs::write(trace, tampered).unwrap();
    assert_eq!(wkpc(&["validate-trace", sys, "--word", "aaaaaaaaa", "--trace", trace]).status.code(), Some(1));
}

#[test]
fn scan_lists_accepted_lengths_and_writes_a_report() {
    let dir = TempDir::new().unwrap();
    let sys = squares_file(dir.path(), "corrected");
    let report = dir.path().join("scan.txt");
    let o =
        wkpc(&["scan", sys.to_str().unwrap(), "--symbol", "a", "--max", "100", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("accepted 4,9,16,25,36,49,64,81,100\n"), "{}", stdout(&o));

    let lines = parse_scan_report(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(lines.len(), 101);
    assert_eq!(lines[16].verdict, Verdict::Accept);
    assert_eq!(lines[16].witness.as_ref().unwrap().to_string(), "bbbbccccbbbbcccc");
    assert_eq!(lines[17].verdict, Verdict::Reject);

    let o = wkpc(&["scan", sys.to_str().unwrap(), "--symbol", "a", "--max", "20", "--max-configs", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("\nlimit "));
}

#[test]
fn as_printed_variant_is_available() {
    let dir = TempDir::new().unwrap();
    let sys = squares_file(dir.path(), "as-printed");
    let o = wkpc(&["scan", sys.to_str().unwrap(), "--symbol", "a", "--max", "20"]);
    assert!(stdout(&o).ends_with("accepted 3,7\n"), "{}", stdout(&o));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let sys = squares_file(dir.path(), "corrected");
    let sys = sys.to_str().unwrap();

    assert_eq!(wkpc(&[]).status.code(), Some(2));
    assert_eq!(wkpc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(wkpc(&["check", sys]).status.code(), Some(2));
    assert_eq!(wkpc(&["check", sys, "--word", "abz"]).status.code(), Some(2));
    assert_eq!(wkpc(&["scan", sys, "--symbol", "z", "--max", "3"]).status.code(), Some(2));
    assert_eq!(wkpc(&["check", "/nonexistent/sys", "--word", "a"]).status.code(), Some(2));

    let broken = dir.path().join("broken.pcwk");
    fs::write(&broken, "alphabet a b\nrelation a b\ncomponent 1 initial q0 final q1\ntrans 1 q0 a\n").unwrap();
    let o = wkpc(&["check", broken.to_str().unwrap(), "--word", "a"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 4"), "{err}");

    let o = wkpc(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("validate-trace"));
}
