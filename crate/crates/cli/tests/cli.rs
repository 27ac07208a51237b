use std::path::Path;
use std::process::{Command, Output};

use lbraid_cli::fixtures::{builtin, FIXTURES_JSON};
use lbraid_cli::{parse, serialize};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz-braid")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn check_identity_l2_passes() {
    let o = bin(&["check", "bleib", "identity-L2"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["passed"], true);
}

#[test]
fn roundtrip_all_fixtures_passes() {
    let o = bin(&["roundtrip", "all-fixtures"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn corrupted_fixture_itemizes_bleib1() {
    let o = bin(&["check", "bleib", "corrupted-fixture"]);
    assert_eq!(code(&o), 1);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let section = &report["sections"][0];
    let v = section["violations"].as_array().unwrap();
    let first = v.iter().find(|x| x["axiom"] == "BLeib1").expect("BLeib1 listed");
    assert_eq!(first["indices"], serde_json::json!([1, 1]));
    assert_eq!(first["residual"], serde_json::json!(["1", "0"]));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&bin(&["frobnicate", "x"])), 2);
    assert_eq!(code(&bin(&["check", "bleib", "no-such-braiding"])), 2);
    assert_eq!(code(&bin(&["check", "nonsense", "identity-L2"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"algebras": {"A": {"dim": 1, "bracket": [{"i": 0, "j": 0, "coeffs": {"0": "1/0"}}]}}}"#)
        .unwrap();
    let o = bin(&["check", "leibniz", "A", "--input", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
}

#[test]
fn every_functor_and_quotient_runs_on_the_suite() {
    for functor in ["C", "X", "semidirect", "tensor", "phi", "psi", "xphi", "xpsi", "bxphi", "bxpsi", "iphi", "ipsi", "biphi", "bipsi"] {
        let o = bin(&["construct", functor, "all-fixtures"]);
        assert_eq!(code(&o), 0, "{functor}: {}", String::from_utf8_lossy(&o.stderr));
    }
    for kind in ["algebra", "xmod", "bxmod", "cat"] {
        let o = bin(&["lieize", kind, "all-fixtures"]);
        assert_eq!(code(&o), 0, "{kind}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn constructed_workspace_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("ws.json");
    let o = bin(&["construct", "C", "identity-L2", "--output", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let ws = parse(&text).unwrap();
    assert!(ws.categories.contains_key("C(identity-L2)"));
    assert_eq!(serialize(&ws), text);
    let o = bin(&["check", "catbraid", "C(identity-L2)", "--input", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
}

#[test]
fn parse_serialize_identity_on_fixtures() {
    let ws = builtin();
    assert_eq!(serialize(&ws), FIXTURES_JSON);
    assert_eq!(parse(&serialize(&ws)).unwrap(), ws);
}

#[test]
fn tensor_matches_committed_golden() {
    let golden = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/golden");
    for a in ["A1", "L2", "R2"] {
        let o = bin(&["tensor", a, "--golden", golden]);
        assert_eq!(code(&o), 0, "{a}: {}", String::from_utf8_lossy(&o.stderr));
        let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let checked = report["sections"][0]["checked"].as_array().unwrap();
        assert!(checked.iter().any(|c| c == "Golden"), "{a} was not compared");
    }
}

/// Runs the whole fixture suite into `dir` and returns the concatenated
/// stdout of every command.
fn suite(dir: &Path) -> Vec<u8> {
    let mut all = Vec::new();
    let p = |f: &str| dir.join(f).to_str().unwrap().to_string();
    let runs: Vec<Vec<String>> = vec![
        vec!["check".into(), "all".into(), "all-fixtures".into(), "--seed".into(), "11".into()],
        vec!["check".into(), "bleib".into(), "corrupted-fixture".into()],
        vec!["roundtrip".into(), "all-fixtures".into(), "--output".into(), p("roundtrip.json")],
        vec!["tensor".into(), "all-fixtures".into(), "--output".into(), p("golden")],
        vec!["construct".into(), "C".into(), "all-fixtures".into(), "--output".into(), p("c.json")],
        vec!["construct".into(), "tensor".into(), "all-fixtures".into(), "--output".into(), p("t.json")],
        vec!["lieize".into(), "cat".into(), "all-fixtures".into(), "--output".into(), p("lie.json")],
    ];
    for r in runs {
        let args: Vec<&str> = r.iter().map(String::as_str).collect();
        all.extend(bin(&args).stdout);
    }
    all
}

fn files(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    let mut stack = vec![dir.to_path_buf()];
    while let Some(d) = stack.pop() {
        for e in std::fs::read_dir(&d).unwrap() {
            let path = e.unwrap().path();
            if path.is_dir() {
                stack.push(path);
            } else {
                let rel = path.strip_prefix(dir).unwrap().display().to_string();
                out.push((rel, std::fs::read(&path).unwrap()));
            }
        }
    }
    out.sort();
    out
}

#[test]
fn two_runs_are_byte_identical() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let (ra, rb) = (suite(a.path()), suite(b.path()));
    assert!(!ra.is_empty());
    assert_eq!(ra, rb, "reports differ");
    let (fa, fb) = (files(a.path()), files(b.path()));
    assert!(fa.len() > 5);
    assert_eq!(fa, fb, "artifacts differ");
}
