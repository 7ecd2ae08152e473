use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn minsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minsep")).args(args).output().unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_minsep"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const C5: &str = "p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";

#[test]
fn classify_exit_codes() {
    let tame = minsep(&["classify", "--family", "P4"]);
    assert_eq!(tame.status.code(), Some(0));
    assert!(stdout(&tame).starts_with("Tame"));
    let not = minsep(&["classify", "--family", "K3,C4"]);
    assert_eq!(not.status.code(), Some(1));
    assert!(stdout(&not).starts_with("NotTame"));
    let open = minsep(&["classify", "--family", "{4P1,C4}"]);
    assert_eq!(open.status.code(), Some(2));
    assert!(stdout(&open).starts_with("Open"));
    assert_eq!(minsep(&["classify", "--family", "C5"]).status.code(), Some(64));
    assert_eq!(minsep(&["classify", "--family", "nonsense"]).status.code(), Some(64));
}

#[test]
fn enumerate_c5_from_stdin() {
    let o = with_stdin(&["enumerate", "--input", "-"], C5);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines, ["1 3", "1 4", "2 4", "2 5", "3 5"]);
    let brute = with_stdin(&["enumerate", "--input", "-", "--method", "brute"], C5);
    assert_eq!(brute.stdout, o.stdout);
    let count = with_stdin(&["enumerate", "--input", "-", "--count-only"], C5);
    assert_eq!(stdout(&count), "5\n");
    let pair = with_stdin(&["enumerate", "--input", "-", "--pair", "1", "3"], C5);
    assert_eq!(stdout(&pair).lines().count(), 2);
}

#[test]
fn limit_truncates_with_code_3() {
    let o = with_stdin(&["enumerate", "--input", "-", "--limit", "2"], C5);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = with_stdin(&["enumerate", "--input", "-", "--limit", "5"], C5);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn gen_then_enumerate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("theta.txt");
    let path = path.to_str().unwrap();
    let o = minsep(&["gen", "--family", "theta", "--params", "3,3", "--certify", "--output", path]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(path).unwrap();
    assert!(text.contains("c certified 8 minimal separators"));
    let certs: Vec<String> = text.lines().filter_map(|l| l.strip_prefix("c s ")).map(str::to_owned).collect();
    assert_eq!(certs.len(), 8);
    let all = stdout(&minsep(&["enumerate", "--input", path]));
    let listed: Vec<&str> = all.lines().collect();
    for c in &certs {
        assert!(listed.contains(&c.as_str()), "{c} missing");
    }
    assert!(listed.len() >= 8);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["gen", "--family", "wall", "--params", "3", "--certify"][..],
        &["growth", "--family", "theta", "--params", "2..4,3", "--mode", "exact", "--no-timing"][..],
        &["verify", "--suite", "bounds", "--max-n", "4", "--samples", "20", "--seed", "5"][..],
    ] {
        let a = minsep(args);
        let b = minsep(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn usage_and_data_errors() {
    assert_eq!(minsep(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(minsep(&["gen", "--family", "theta", "--params", "1"]).status.code(), Some(64));
    assert_eq!(minsep(&["gen", "--family", "grid", "--params", "2,2", "--certify"]).status.code(), Some(64));
    let bad = with_stdin(&["enumerate", "--input", "-"], "p 3 1\ne 1 9\n");
    assert_eq!(bad.status.code(), Some(65));
    let garbage = with_stdin(&["enumerate", "--input", "-"], "hello\n");
    assert_eq!(garbage.status.code(), Some(65));
    assert_eq!(minsep(&["enumerate", "--input", "/nonexistent/graph.txt"]).status.code(), Some(66));
}

#[test]
fn survey_csv() {
    let o = minsep(&["survey", "--csv", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("family,verdict"), "{header}");
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 2429);
    assert_eq!(rows.iter().filter(|r| r.contains(",Open,")).count(), 2);
}

#[test]
fn verify_json() {
    let o = minsep(&["verify", "--suite", "ops", "--max-n", "4", "--samples", "20", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        assert_eq!(r["status"], "pass");
        for key in ["suite", "check_id", "paper_ref", "applications"] {
            assert!(r.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn growth_without_timing() {
    let o = minsep(&["growth", "--family", "theta", "--params", "2..4,3", "--mode", "exact", "--no-timing"]);
    assert_eq!(
        stdout(&o),
        "family,params,n,count,is_lower_bound,elapsed_ms\n\
         theta,k=2;l=3,6,9,false,0\n\
         theta,k=3;l=3,8,15,false,0\n\
         theta,k=4;l=3,10,25,false,0\n"
    );
    let o = minsep(&["growth", "--family", "wall", "--params", "2..4", "--no-timing"]);
    let counts: Vec<_> = stdout(&o).lines().skip(1).map(|l| l.split(',').nth(3).unwrap().to_owned()).collect();
    assert_eq!(counts, ["4", "8", "16"]);
}
