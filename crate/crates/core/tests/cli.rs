//! The `rank1` binary: exit codes, output formats and determinism.

use std::process::{Command, Output};

fn rank1(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rank1"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn construct_reports_dimension_and_signature() {
    let o = rank1(&["construct", "--algebra", "f4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("dim: 52"), "{s}");
    assert!(s.contains("Killing signature: (16,36)"), "{s}");
    assert!(s.contains("B_theta positive definite: true"), "{s}");

    let s = stdout(&rank1(&["construct", "--algebra", "so(1,2)"]));
    assert!(s.contains("dim: 3"), "{s}");
    let s = stdout(&rank1(&["construct", "--algebra", "sp(1,9)"]));
    assert!(s.contains("dim: 210"), "{s}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["construct", "--algebra", "e8"][..],
        &["construct", "--algebra", "su(1,1)"],
        &["verify", "--algebra", "su(1,2)", "--lemma", "nonsense"],
        &["verify", "--algebra", "su(1,2)", "--format", "xml"],
        &["frobnicate"],
    ] {
        assert_eq!(rank1(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn passing_verification_exits_0() {
    let o = rank1(&["verify", "--algebra", "f4", "--lemma", "signature-J0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(10,16,0)"));
    let o = rank1(&[
        "verify",
        "--algebra",
        "su(1,2)",
        "--lemma",
        "transversality",
        "--trials",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn failing_verification_exits_1_with_coordinates() {
    let o = rank1(&[
        "verify",
        "--algebra",
        "su(1,2)",
        "--lemma",
        "bracket-identities",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAILED m1:"));
}

#[test]
fn json_schema_and_determinism() {
    let args = [
        "verify",
        "--algebra",
        "su(1,3)",
        "--lemma",
        "all",
        "--seed",
        "3",
        "--trials",
        "10",
        "--format",
        "json",
    ];
    let a = rank1(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_rank1"))
        .env("RANK1_THREADS", "1")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["algebra"], "su(1,3)");
    assert_eq!(v["seed"], 3);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 13);
    assert_eq!(reports[0]["lemma_id"], "transversality");
    for key in [
        "lemma_id",
        "family",
        "parameters",
        "trials",
        "passes",
        "failures",
    ] {
        assert!(reports[0].get(key).is_some(), "{key}");
    }
}

#[test]
fn export_writes_rational_strings() {
    let o = rank1(&["export", "--algebra", "su(1,2)", "--what", "structure"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let c = &v["structure_constants"];
    assert_eq!(c.as_array().unwrap().len(), 8);
    assert!(c[0][1][0].as_str().unwrap().contains('/'));

    let o = rank1(&["export", "--algebra", "sp(1,2)", "--what", "decomposition"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dims"]["g_2alpha"], 3);

    let o = rank1(&[
        "export",
        "--algebra",
        "so(1,3)",
        "--output",
        "/nonexistent-dir/x.json",
    ]);
    assert_eq!(o.status.code(), Some(1));
}
