use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hermitian_codes::cli::{Metadata, OutputDocument};

fn hermcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hermcodes"))
        .args(args)
        .env_remove("HERMCODES_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn csv_doc(o: &Output) -> OutputDocument {
    let meta = Metadata { command: String::new(), q: None, version: String::new() };
    OutputDocument::from_csv(&stdout(o), meta).unwrap()
}

#[test]
fn semigroup_grid() {
    let o = hermcodes(&["semigroup", "4"]);
    assert!(o.status.success());
    let d = csv_doc(&o);
    assert_eq!(d.rows.len(), 12);
    assert_eq!(d.rows[0][..4], ["lambda", "3", "15", "19"]);
    // σ grid, bottom-left, and μ grid, top-right
    assert_eq!(d.rows[7][2], "64");
    assert_eq!(d.rows[8][17], "64");
}

#[test]
fn unsupported_q_is_usage_error() {
    let o = hermcodes(&["semigroup", "17"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unsupported q"));
}

#[test]
fn verify_exit_codes_and_skips() {
    let o = hermcodes(&["verify", "2", "--suite", "distances"]);
    assert_eq!(o.status.code(), Some(0));
    let d = csv_doc(&o);
    assert!(d.rows.iter().all(|r| r[2] == "PASS"), "{:?}", d.rows);

    let o = hermcodes(&["verify", "3", "--suite", "distances", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("SKIPPED") && text.contains("PASS"));

    let o = Command::new(env!("CARGO_BIN_EXE_hermcodes"))
        .args(["verify", "3", "--suite", "distances"])
        .env("HERMCODES_BUDGET", "1000")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("SKIPPED"));

    let o = hermcodes(&["verify", "4", "--suite", "semigroup"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("64 cases"));
}

#[test]
fn pairs_listing_and_search() {
    let d = csv_doc(&hermcodes(&["pairs", "3", "--family", "lower", "--min-dx", "2"]));
    assert_eq!(d.rows.len(), 5);
    let d = csv_doc(&hermcodes(&["pairs", "5", "--family", "lower"]));
    assert_eq!(d.rows.len(), 15);
    assert!(d.rows.iter().any(|r| r[0] == "[[125,1,81/25]]_25"));

    let o = hermcodes(&["pairs", "3", "--objective", "dz", "--min-l", "2", "--min-dx", "2"]);
    let d = csv_doc(&o);
    assert_eq!(d.rows.len(), 1);
    assert_eq!(d.rows[0][0], "[[27,2,23/2]]_9");

    let o = hermcodes(&["pairs", "3", "--objective", "ell", "--min-dz", "28"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_round_trip_and_determinism() {
    let a = hermcodes(&["pairs", "3", "--family", "upper", "--format", "json"]);
    let b = hermcodes(&["pairs", "3", "--family", "upper", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let doc = OutputDocument::from_json(&stdout(&a)).unwrap();
    assert_eq!(doc.metadata.q, Some(3));
    assert_eq!(doc.metadata.command, "pairs");
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap() + "\n", stdout(&a));
}

#[test]
fn sss_curve_columns() {
    let d = csv_doc(&hermcodes(&["sss-curve", "3", "--t", "3"]));
    let (r, b) = (d.column("r").unwrap(), d.column("baseline_r").unwrap());
    for row in &d.rows {
        if let (Ok(r), Ok(b)) = (row[r].parse::<u32>(), row[b].parse::<u32>()) {
            assert!(r <= b);
        }
    }
    assert_eq!(hermcodes(&["sss-curve", "2", "--t", "8"]).status.code(), Some(2));
}

#[test]
fn compare_defaults() {
    let d = csv_doc(&hermcodes(&["compare-grs", "3"]));
    assert_eq!(d.rows.len(), 32);
    assert_eq!(d.rows[0][1..], ["[[27,2,12/2]]_9", "[[27,2,23/2]]_9", "improved(23,2)", "[[27,12,12/2]]_9", "improved(12,2)"]);
    let d = csv_doc(&hermcodes(&["compare-cartesian", "3"]));
    assert_eq!(d.rows.len(), 19);
    assert_eq!(d.rows[7][1], "[[27,>=5,7/1]]_9");
    let o = hermcodes(&["compare-grs", "3", "--params", "2,13,13,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("k < m2"));
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn deal_reconstruct_audit() {
    let dir = tempfile::tempdir().unwrap();
    let scheme = dir.path().join("scheme.txt").display().to_string();
    assert!(hermcodes(&["scheme", "2", "--pair", "lower:0,1", "-o", &scheme]).status.success());

    let o = hermcodes(&["deal", "--scheme", &scheme, "--secret", "2,3", "--seed", "11"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let shares = stdout(&o);
    let again = hermcodes(&["deal", "--scheme", &scheme, "--secret", "2,3", "--seed", "11"]);
    assert_eq!(shares, stdout(&again));

    let all = write(dir.path(), "all.txt", &shares);
    let o = hermcodes(&["reconstruct", "--scheme", &scheme, "--shares", &all]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "2,3\n");

    // audit gives t; the first t shares must leave the secret open
    let d = csv_doc(&hermcodes(&["audit", "--scheme", &scheme]));
    let t: usize = d.rows[0][d.column("t").unwrap()].parse().unwrap();
    assert_eq!((t, d.rows[0][d.column("r").unwrap()].as_str()), (1, "4"));
    let lines: Vec<&str> = shares.lines().collect();
    let few = write(dir.path(), "few.txt", &(lines[..=t].join("\n") + "\n"));
    let o = hermcodes(&["reconstruct", "--scheme", &scheme, "--shares", &few]);
    assert_eq!(o.status.code(), Some(4));

    let mut corrupt: Vec<String> = lines.iter().map(|s| s.to_string()).collect();
    let (i, v) = corrupt[1].split_once(':').unwrap();
    corrupt[1] = format!("{i}:{}", (v.parse::<u16>().unwrap() + 1) % 4);
    let bad = write(dir.path(), "bad.txt", &(corrupt.join("\n") + "\n"));
    let o = hermcodes(&["reconstruct", "--scheme", &scheme, "--shares", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not consistent"));

    let o = hermcodes(&["deal", "--scheme", &scheme, "--secret", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("expected 2 values"));
}

#[test]
fn audit_budget_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let scheme = dir.path().join("scheme.txt").display().to_string();
    assert!(hermcodes(&["scheme", "3", "--pair", "lower:1,1", "-o", &scheme]).status.success());
    let o = hermcodes(&["audit", "--scheme", &scheme, "--budget", "100"]);
    assert_eq!(o.status.code(), Some(3));
}
