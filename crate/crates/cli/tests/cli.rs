use std::process::{Command, Output};

use e6spin::report::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e6verify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn thresholds_verdicts() {
    let o = run(&["thresholds", "--family", "natural", "--k", "2", "--c", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("excluded set: N-16 (nested)"), "{s}");
    assert!(s.contains("[pass] c: excluded"), "{s}");

    let s = stdout(&run(&["thresholds", "--family", "lambda3", "--c", "-22"]));
    assert!(s.contains("c: not excluded"), "{s}");
    let s = stdout(&run(&["thresholds", "--family", "spin4", "--k", "2", "--c", "-13"]));
    assert!(s.contains("c: excluded"), "{s}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["decompose", "--maxdeg", "13"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--maxdeg", "two"]).status.code(), Some(2));
    assert_eq!(run(&["thresholds", "--family", "e8"]).status.code(), Some(2));
    assert_eq!(run(&["thresholds", "--family", "natural", "--c", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["flows", "--samples", "0"]).status.code(), Some(2));
    assert_eq!(run(&["thresholds", "--family", "natural", "--k", "40"]).status.code(), Some(2));
}

#[test]
fn flows_are_reproducible() {
    let a = run(&["flows", "--samples", "1", "--seed", "9"]);
    let b = run(&["flows", "--samples", "1", "--seed", "9"]);
    let c = run(&["flows", "--samples", "1", "--seed", "10"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
    assert!(stdout(&a).contains("corrected 3"));
}

#[test]
fn parallel_runs_match_and_json_round_trips() {
    let dir = std::env::temp_dir();
    let p1 = dir.join(format!("e6verify-{}-1.json", std::process::id()));
    let p2 = dir.join(format!("e6verify-{}-2.json", std::process::id()));
    let a = run(&["verify-algebra", "--json", p1.to_str().unwrap()]);
    let b = run(&["verify-algebra", "--parallel", "2", "--json", p2.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let text = std::fs::read_to_string(&p1).unwrap();
    assert_eq!(text, std::fs::read_to_string(&p2).unwrap());
    let report: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(report.command, "verify-algebra");
    assert!(report.ok() && report.summary.corrected > 0);
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
    let _ = std::fs::remove_file(p1);
    let _ = std::fs::remove_file(p2);
}

#[test]
fn decompose_and_functor() {
    let s = stdout(&run(&["decompose", "--maxdeg", "2"]));
    assert!(s.contains("126 + 10 = 136"), "{s}");
    let o = run(&["verify-functor", "--family", "natural", "--c", "0", "--maxdeg", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("bracket identity on slices"));
}
