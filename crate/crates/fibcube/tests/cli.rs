use std::process::{Command, Output};

use fibcube::export::parse_edgelist;

fn fibcube(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibcube"))
        .args(args)
        .env_remove("FIBCUBE_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn phi_table() {
    let o = fibcube(&["table", "phi", "--p", "2", "--r", "2", "--i-max", "12"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["11", "74"]));
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["12", "116"]));
}

#[test]
fn encode_decode() {
    let o = fibcube(&["encode", "2", "2", "5", "11"]);
    assert_eq!(stdout(&o).trim(), "10100");
    let o = fibcube(&["decode", "2", "2", "10100"]);
    assert_eq!(stdout(&o).trim(), "11");
    let o = fibcube(&["encode", "2", "2", "5", "12"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_edgelist_roundtrip() {
    let o = fibcube(&["gen", "O", "2", "2", "7"]);
    assert!(o.status.success());
    let (order, edges) = parse_edgelist(&stdout(&o)).unwrap();
    assert_eq!(order, 30);
    assert!(edges.iter().all(|&(u, v)| u < v));
    let dot = stdout(&fibcube(&["gen", "I", "1", "1", "3", "--format", "dot"]));
    assert!(dot.starts_with("graph "));
}

#[test]
fn exit_codes() {
    assert_eq!(
        fibcube(&["gen", "O", "1", "9", "20", "--budget", "100"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        fibcube(&["verify", "--claim", "no-such-claim"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fibcube(&["gen", "O", "2", "2", "5", "--out", "/nonexistent/dir/g.txt"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(fibcube(&["verify", "--p", "3..1"]).status.code(), Some(2));
}

#[test]
fn iso() {
    let o = fibcube(&["iso", "O", "2", "2", "4", "I", "3", "2", "4"]);
    assert!(stdout(&o).starts_with("isomorphic\n"));
    let o = fibcube(&["iso", "O", "2", "2", "5", "I", "2", "2", "5"]);
    assert_eq!(stdout(&o).trim(), "not isomorphic");
}

#[test]
fn verify_with_cache_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.ndjson");
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_fibcube"))
            .args([
                "verify",
                "--p",
                "1..2",
                "--r",
                "1..2",
                "--n",
                "1..7",
                "--format",
                "csv",
                "--no-fixtures",
            ])
            .env("FIBCUBE_CACHE", &cache)
            .output()
            .unwrap()
    };
    let first = run();
    assert!(
        first.status.success(),
        "{}",
        String::from_utf8_lossy(&first.stderr)
    );
    assert!(cache.exists());
    let second = run();
    let strip = |o: &Output| -> Vec<String> {
        // drop the trailing runtime column
        stdout(o)
            .lines()
            .map(|l| l.rsplit_once(',').unwrap().0.to_string())
            .collect()
    };
    assert_eq!(strip(&first), strip(&second));
    assert!(strip(&first).len() > 100);
}

#[test]
fn claims_listing() {
    let text = stdout(&fibcube(&["claims"]));
    assert!(text.contains("diameter-i"));
    assert!(text.contains("phi-2-2-11"));
}
