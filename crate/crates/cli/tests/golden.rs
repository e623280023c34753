use std::process::Command;

use gpgraph::report::{field_report, parse_records, parse_table, render_records, render_table};

const FIELDS: [u64; 4] = [25, 49, 81, 256];

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_gpgraph")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn tables_match_golden_files() {
    for q in FIELDS {
        let rows = field_report(q).unwrap();
        assert_eq!(render_table(&rows), golden(&format!("report_{q}.txt")), "q = {q}");
        assert_eq!(render_records(&rows), golden(&format!("report_{q}.jsonl")), "q = {q}");
    }
}

#[test]
fn binary_output_matches_golden_files() {
    for q in FIELDS {
        let (code, out, _) = cli(&["report", "--q", &q.to_string()]);
        assert_eq!(code, 0);
        assert_eq!(out, golden(&format!("report_{q}.txt")));
    }
    let (code, out, _) = cli(&["report", "--q", "25", "--format", "records"]);
    assert_eq!(code, 0);
    assert_eq!(out, golden("report_25.jsonl"));
}

#[test]
fn records_round_trip_and_agree_with_tables() {
    for q in [4, 9, 25, 27, 49, 64, 81, 125, 256] {
        let rows = field_report(q).unwrap();
        assert_eq!(parse_records(&render_records(&rows)).unwrap(), rows);
        assert_eq!(parse_table(&render_table(&rows)).unwrap(), rows);
        let ks: Vec<u64> = rows.iter().map(|r| r.k).collect();
        let mut sorted = ks.clone();
        sorted.sort();
        assert_eq!(ks, sorted);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["verify", "--max-q", "3"]).0, 0);
    let (code, _, err) = cli(&["report", "--q", "12"]);
    assert_eq!(code, 2);
    assert!(err.contains("not a prime power"));
    assert_eq!(cli(&["report"]).0, 2);
    assert_eq!(cli(&["families", "--kind", "totient-power", "--p", "7", "--k", "9"]).0, 2);
    assert_eq!(cli(&["spectrum", "--q", "729", "--k", "2", "--oracle"]).0, 2);
}

#[test]
fn other_commands() {
    let (code, out, _) = cli(&["spectrum", "--q", "7", "--k", "2", "--oracle"]);
    assert_eq!(code, 0);
    assert!(out.contains("nature complex, mu = 3"));
    let (code, out, _) = cli(&["waring", "--q", "25", "--k", "6"]);
    assert_eq!(code, 0);
    assert!(out.contains("g(6,25) = -") && out.contains("absent: Γ(6,25) has 5 components"));
    let (code, out, _) = cli(&["families", "--kind", "tower", "--k", "2", "--base-q", "9", "--max-q", "81"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().skip(1).count(), 2);
    assert!(out.contains("Γ(20,81)  integral"));
    let (code, out, _) = cli(&[
        "families", "--kind", "two-parameter", "--inner", "semiprimitive-divisor", "--p", "3", "--k", "4",
        "--max-q", "6561", "--format", "records",
    ]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.contains("\"integral\":true")));
}
