use std::path::Path;
use std::process::Command;

use gordian::cli::{run, Outcome};

fn gordian(args: &[&str]) -> Outcome {
    run(std::iter::once("gordian").chain(args.iter().copied()))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn unknot_reports_crossing_changes() {
    let o = gordian(&["unknot", "2: 1 1 1"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("crossing_changes 1\n"));
    assert!(o.stdout.contains("final 1:\n"));
}

#[test]
fn info_and_torus() {
    let o = gordian(&["info", "3: 1 2 1 2"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("knot yes\n"));
    assert!(o.stdout.contains("unknotting_number 1\n"));
    assert_eq!(gordian(&["torus", "2", "5"]).stdout, "2: 1 1 1 1 1\n");
    assert_eq!(gordian(&["alexander", "2: 1 1 1"]).stdout, "1 - t + t^2\n");
}

#[test]
fn adjacency_ci_certificate() {
    let o = gordian(&["adjacency", "ci", "3", "1"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("source T(4,9)"));
    assert!(o.stdout.contains("target T(3,10)"));
    assert!(o.stdout.contains("u_gap 3\n"));
    assert!(o.stdout.contains("crossing_changes 3\n"));
    assert!(o
        .stdout
        .contains("verified strands=yes length=yes alexander=yes\n"));

    let skipped = gordian(&["adjacency", "ci", "3", "1", "--no-verify"]);
    assert!(skipped.stdout.contains("verified skipped\n"));
}

#[test]
fn catalog_verdicts() {
    let claimed = gordian(&["catalog", "2", "7", "3", "5"]);
    assert_eq!(claimed.code, 0, "{}", claimed.stderr);
    assert!(claimed.stdout.contains("verdict CLAIMED\n"));
    assert!(claimed.stdout.contains("basis family-cin constructive\n"));

    let uncovered = gordian(&["catalog", "3", "100", "4", "9"]);
    assert_eq!(uncovered.code, 0);
    assert!(uncovered.stdout.contains("verdict NOT_COVERED\n"));
    assert!(uncovered.stdout.contains("certificate none\n"));
}

#[test]
fn certificate_round_trip_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("cert.txt");
    let o = gordian(&["adjacency", "cin", "2", "1", "--out", path(&file)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = gordian(&["verify", path(&file)]);
    assert_eq!(v.code, 0, "{}", v.stderr);
    assert!(v.stdout.ends_with("valid certificate\n"));
}

#[test]
fn trace_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("trace.txt");
    let o = gordian(&["unknot", "3: 1 2 1 2 1 2 1 2", "--trace", path(&file)]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = gordian(&["verify", path(&file)]);
    assert_eq!(v.code, 0, "{}", v.stderr);
    assert!(v.stdout.starts_with("valid trace\n"));

    // Corrupt the recorded word after the first step.
    let text = std::fs::read_to_string(&file).unwrap();
    let mut lines: Vec<String> = text.lines().map(str::to_string).collect();
    let (head, _) = lines[2].split_once("=>").unwrap();
    lines[2] = format!("{head}=> 3: 1 1 1 1 1 1");
    std::fs::write(&file, lines.join("\n") + "\n").unwrap();
    let bad = gordian(&["verify", path(&file)]);
    assert_eq!(bad.code, 1, "{}", bad.stdout);
    assert!(bad.stderr.contains("step 0"), "{}", bad.stderr);
}

#[test]
fn search_finds_a_positive_path() {
    let o = gordian(&["search", "3: 1 2 1 2 1 2 1 2", "2: 1 1 1 1 1"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("found crossing_changes 1 "));
    assert!(o.stdout.contains("positive_path yes\n"));
    assert!(o.stdout.contains("trace v1\n"));
}

#[test]
fn malformed_input_exits_2() {
    assert_eq!(gordian(&["unknot", "2: 1 x"]).code, 2);
    assert_eq!(gordian(&["unknot", "2: 1 3"]).code, 2);
    assert_eq!(gordian(&["frobnicate"]).code, 2);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("junk.txt");
    std::fs::write(&file, "hello\n").unwrap();
    let o = gordian(&["verify", path(&file)]);
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("line 1"));
    assert_eq!(
        gordian(&["verify", path(&dir.path().join("missing"))]).code,
        2
    );
}

#[test]
fn domain_errors_exit_1() {
    let o = gordian(&["torus", "0", "3"]);
    assert_eq!(o.code, 1, "{}", o.stdout);
    assert!(!o.stderr.is_empty());
    assert_eq!(gordian(&["search", "2: 1 1 1", "2: 1 1 1 1 1"]).code, 1);
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = gordian(&["enumerate", "2", "--budget", "1000"]);
    assert_eq!(o.code, 3);
    assert!(o.stdout.contains("status partial\n"));
    assert!(o.stdout.contains("examined 1000 "));

    let s = gordian(&[
        "search",
        "3: 1 2 1 2 1 2 1 2",
        "2: 1 1 1 1 1",
        "--nodes",
        "2",
    ]);
    assert_eq!(s.code, 3, "{}", s.stderr);
}

#[test]
fn enumeration_matches_golden_for_any_job_count() {
    let golden = include_str!("golden/enumerate_m2.txt");
    for jobs in ["1", "4"] {
        let o = gordian(&["enumerate", "2", "--jobs", jobs]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert_eq!(o.stdout, golden, "jobs {jobs}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gordian");
    let ok = Command::new(bin)
        .args(["unknot", "2: 1 1 1"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("crossing_changes 1"));
    let bad = Command::new(bin)
        .args(["unknot", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
