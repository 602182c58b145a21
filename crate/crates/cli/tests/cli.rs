//! The `fusion` binary and the batch runner: exit codes, report files,
//! group files and determinism.

use std::path::Path;
use std::process::Command;

use fusion_cli::batch::{FaultTag, BatchSpec, Check, PrimeSelection, EXIT_FATAL, EXIT_INPUT, EXIT_OK, EXIT_UNMET};
use fusion_cli::report::ReportDocument;
use fusion_cli::{catalog, resolve_group, run_batch, GroupFile, GroupFileError};

fn fusion(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_fusion")).args(args).output().expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn spec(groups: &[&str], primes: Option<Vec<u64>>, checks: &[Check]) -> BatchSpec {
    let mut s = BatchSpec::new(groups.iter().map(|g| g.to_string()).collect(), checks.to_vec());
    if let Some(p) = primes {
        s.primes = PrimeSelection::List(p);
    }
    s
}

fn without_timing(doc: &ReportDocument) -> String {
    let mut v = serde_json::to_value(doc).unwrap();
    v.as_object_mut().unwrap().remove("timing");
    serde_json::to_string(&v).unwrap()
}

#[test]
fn group_file_examples() {
    let c3 = GroupFile::parse("degree 3\ngen (1 2 3)\n").unwrap().build().unwrap();
    assert_eq!(c3.order(), 3);
    let s4 = GroupFile::parse("degree 4\ngen (1 2 3 4)\ngen (1 2)\n").unwrap().build().unwrap();
    assert_eq!(s4.order(), 24);
    assert!(matches!(GroupFile::parse("degree 4\ngen (1 2 5)\n"), Err(GroupFileError::InvalidCycle { line: 2, .. })));
}

#[test]
fn catalog_round_trips_bit_exactly() {
    for g in catalog::builtin_catalog() {
        let text = g.serialize();
        let back = GroupFile::parse(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.serialize(), text);
    }
}

#[test]
fn resolve_prefers_catalog_then_files() {
    assert_eq!(resolve_group("SL(2,3)").unwrap().build().unwrap().order(), 24);
    assert_eq!(resolve_group("C7:C3").unwrap().build().unwrap().order(), 21);
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "mine.grp", "# a Frobenius group\ndegree 5\ngen (1 2 3 4 5)\ngen (2 5)(3 4)\n");
    let file = resolve_group(&path).unwrap();
    assert_eq!(file.name, "mine");
    assert_eq!(file.build().unwrap().order(), 10);
    assert!(resolve_group("no-such-group").is_err());
}

#[test]
fn batch_s4_theorem_a_is_confirmed() {
    let out = run_batch(&spec(&["S4"], Some(vec![3]), &[Check::TheoremA]));
    assert_eq!(out.exit_code, EXIT_OK);
    assert_eq!(out.document.reports.len(), 1);
    assert_eq!(out.document.reports[0].verdict, "confirmed");
}

#[test]
fn batch_input_errors() {
    assert_eq!(run_batch(&spec(&["S4", "Nope"], None, &[Check::Gt])).exit_code, EXIT_INPUT);
    assert_eq!(run_batch(&spec(&["S4"], Some(vec![2]), &[Check::TheoremA])).exit_code, EXIT_INPUT);
    assert_eq!(run_batch(&spec(&["S4"], Some(vec![9]), &[Check::TheoremA])).exit_code, EXIT_INPUT);
    let mut limited = spec(&["S6"], None, &[Check::Gt]);
    limited.limit_order = Some(100);
    assert_eq!(run_batch(&limited).exit_code, EXIT_INPUT);
    let mut lattice = spec(&["C3^3"], None, &[Check::TheoremA]);
    lattice.limit_lattice = Some(2);
    assert_eq!(run_batch(&lattice).exit_code, EXIT_INPUT);
}

#[test]
fn batch_skips_primes_not_dividing_the_order() {
    let out = run_batch(&spec(&["C5"], Some(vec![3]), &[Check::Gt]));
    assert_eq!(out.exit_code, EXIT_OK);
    assert!(out.document.reports.is_empty());
    assert_eq!(out.document.notes.len(), 1);
}

#[test]
fn unmet_hypotheses_exit_two() {
    let out = run_batch(&spec(&["A4"], Some(vec![3]), &[Check::Zj]));
    assert_eq!(out.exit_code, EXIT_UNMET);
    assert!(out.document.reports.iter().all(|r| r.verdict == "hypotheses-unmet"));
}

#[test]
fn faults_exit_one() {
    let mut dedup = spec(&["A4"], Some(vec![3]), &[Check::Frobenius]);
    dedup.fault = Some(FaultTag::BrokenDedup);
    let out = run_batch(&dedup);
    assert_eq!(out.exit_code, EXIT_FATAL);
    assert!(out.document.reports[0].error.as_ref().unwrap().fatal);

    let mut corrupt = spec(&["3^1+2_exp3"], Some(vec![3]), &[Check::Zj]);
    corrupt.fault = Some(FaultTag::CorruptedFamily);
    let out = run_batch(&corrupt);
    assert_eq!(out.exit_code, EXIT_FATAL);
    assert!(out.document.reports.iter().any(|r| r.verdict == "FALSIFIED"));
}

#[test]
fn batch_reports_are_deterministic() {
    let s = spec(&["S4", "SL(2,3)", "C7:C3", "3^1+2_exp3", "A5"], None, &Check::ALL);
    let a = run_batch(&s);
    let b = run_batch(&s);
    assert_eq!(without_timing(&a.document), without_timing(&b.document));
    let parsed: ReportDocument = serde_json::from_str(&a.document.to_json()).unwrap();
    assert_eq!(without_timing(&parsed), without_timing(&a.document));
}

#[test]
fn spec_json_format() {
    let s: BatchSpec = serde_json::from_str(
        r#"{"groups": ["S4"], "primes": "all-odd", "family": "max-elementary-abelian", "checks": ["theorem-b", "np-lemma"]}"#,
    )
    .unwrap();
    assert_eq!(s.primes, PrimeSelection::default());
    assert_eq!(s.checks, vec![Check::TheoremB, Check::NpLemma]);
    let s: BatchSpec = serde_json::from_str(r#"{"groups": [], "primes": [3, 5], "checks": []}"#).unwrap();
    assert_eq!(s.primes, PrimeSelection::List(vec![3, 5]));
    assert!(serde_json::from_str::<BatchSpec>(r#"{"groups": [], "checks": ["bogus"]}"#).is_err());
}

#[test]
fn binary_subcommands() {
    let (code, out) = fusion(&["info", "S4"]);
    assert_eq!(code, 0);
    assert!(out.contains("order    24"));
    let (code, out) = fusion(&["nilpotency", "S4", "-p", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("normal p-complement           false"));
    let (code, out) = fusion(&["stability", "A4", "-p", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("p-stable"));
    let (code, out) = fusion(&["family", "3^1+2_exp3", "-p", "3", "--kind", "max-abelian"]);
    assert_eq!(code, 0);
    assert!(out.contains("(4 members)"));
    assert_eq!(fusion(&["check-a", "SL(2,3)", "-p", "3"]).0, 0);
    assert_eq!(fusion(&["check-b", "C7:C3", "-p", "7", "--closed", "auto"]).0, 0);
    assert_eq!(fusion(&["check-b", "C7:C3", "-p", "7", "--closed", "(1 2 3 4 5 6 7)"]).0, 0);
    assert_eq!(fusion(&["gt", "S4", "-p", "3"]).0, 0);
    assert_eq!(fusion(&["replacement", "C3wrC3", "-p", "3"]).0, 0);
    assert_eq!(fusion(&["zj", "C13:C3", "-p", "13"]).0, 0);
    assert_eq!(fusion(&["zj", "A4", "-p", "3"]).0, 2);
    assert_eq!(fusion(&["--strict-quantifier", "existential", "check-b", "3^1+2_exp3", "-p", "3"]).0, 0);
    assert_eq!(fusion(&["info", "Nope"]).0, 3);
    assert_eq!(fusion(&["--limit-order", "10", "info", "S4"]).0, 3);
    assert_eq!(fusion(&["--limit-lattice", "1", "check-a", "C3^2", "-p", "3"]).0, 3);
}

#[test]
fn binary_batch_writes_identical_reports() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(
        dir.path(),
        "spec.json",
        r#"{"groups": ["S4", "C7:C3"], "primes": "all-odd", "checks": ["frobenius", "theorem-a", "theorem-b"]}"#,
    );
    let r1 = dir.path().join("r1.json");
    let r2 = dir.path().join("r2.json");
    assert_eq!(fusion(&["--report", r1.to_str().unwrap(), "batch", "--spec", &spec]).0, 0);
    assert_eq!(fusion(&["--report", r2.to_str().unwrap(), "batch", "--spec", &spec]).0, 0);
    let d1: ReportDocument = serde_json::from_str(&std::fs::read_to_string(&r1).unwrap()).unwrap();
    let d2: ReportDocument = serde_json::from_str(&std::fs::read_to_string(&r2).unwrap()).unwrap();
    assert_eq!(without_timing(&d1), without_timing(&d2));
    assert_eq!(d1.tool_version, env!("CARGO_PKG_VERSION"));
    assert_eq!(d1.summary.total, d1.reports.len());

    let missing = write(dir.path(), "missing.json", r#"{"groups": ["Nope"], "checks": ["gt"]}"#);
    assert_eq!(fusion(&["batch", "--spec", &missing]).0, 3);
    let faulty = write(
        dir.path(),
        "fault.json",
        r#"{"groups": ["A4"], "primes": [3], "checks": ["frobenius"], "fault": "broken-dedup"}"#,
    );
    assert_eq!(fusion(&["batch", "--spec", &faulty]).0, 1);
    let malformed = write(dir.path(), "bad.json", "{");
    assert_eq!(fusion(&["batch", "--spec", &malformed]).0, 3);
}

#[test]
fn group_file_on_the_command_line() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "c7c3.grp", "name F21\ndegree 7\ngen (1 2 3 4 5 6 7)\ngen (2 3 5)(4 7 6)\n");
    let (code, out) = fusion(&["info", &good]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("order    21"));
    let bad = write(dir.path(), "bad.grp", "degree 4\ngen (1 2 5)\n");
    assert_eq!(fusion(&["info", &bad]).0, 3);
}
