use std::fs;
use std::path::Path;

use homjordan::corpus;
use homjordan::document::{algebra_to_json, parse_algebra};
use homjordan_cli::{run, EXIT_FAILED, EXIT_INPUT, EXIT_OK};
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("homjordan").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let good = write(dir.path(), "dual.json", &algebra_to_json(&corpus::dual()));
    let (code, out, _) = invoke(&["validate", "-i", &good]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(json(&out)["ok"], true);

    let mut doc = json(&algebra_to_json(&corpus::dual()));
    doc["mu"][0][1] = json(r#"["0","0"]"#);
    let bad = write(dir.path(), "bad.json", &doc.to_string());
    let (code, out, err) = invoke(&["validate", "-i", &bad]);
    assert_eq!(code, EXIT_FAILED);
    assert_eq!(json(&out)["non_commuting_pair"], json("[0, 1]"));
    assert!(err.contains("μ(e0, e1) ≠ μ(e1, e0)"));

    let broken = write(dir.path(), "broken.json", "{\"name\": ");
    assert_eq!(invoke(&["validate", "-i", &broken]).0, EXIT_INPUT);
    assert_eq!(invoke(&["validate"]).0, EXIT_INPUT);
    assert_eq!(invoke(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn spaces_reports_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let ab = write(dir.path(), "ab.json", &algebra_to_json(&corpus::abelian(2)));
    let (code, out, _) = invoke(&["spaces", "-i", &ab, "-k", "1", "--kinds", "der"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["aggregates"][0]["dims"], json("[4, 4]"));
    assert_eq!(v["spaces"].as_array().unwrap().len(), 2);

    let u = write(dir.path(), "u.json", &algebra_to_json(&corpus::unital1()));
    let (_, out, _) = invoke(&["spaces", "-i", &u, "-k", "0"]);
    let dims: Vec<u64> = json(&out)["aggregates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|a| a["dims"][0].as_u64().unwrap())
        .collect();
    assert_eq!(dims, vec![0, 1, 1, 1, 1, 0]);
    assert_eq!(
        invoke(&["spaces", "-i", &u, "--kinds", "nope"]).0,
        EXIT_INPUT
    );
}

#[test]
fn generator() {
    let (code, out, _) = invoke(&["gen", "--kind", "abelian", "--dim", "3"]);
    assert_eq!(code, EXIT_OK);
    let a = parse_algebra(&out).unwrap();
    assert!(a.is_abelian());
    assert_eq!(a.alpha(), &homjordan::Matrix::identity(3));

    let (_, out, _) = invoke(&["gen", "--kind", "yau", "--lambda", "2"]);
    let a = parse_algebra(&out).unwrap();
    assert!(a.validate().all_pass());

    let dir = tempfile::tempdir().unwrap();
    let (d1, d2) = (dir.path().join("one"), dir.path().join("two"));
    for d in [&d1, &d2] {
        let (code, out, _) = invoke(&["gen", "--seed", "7", "-o", d.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        assert!(json(&out)["files"].as_array().unwrap().len() >= 15);
    }
    let mut names: Vec<_> = fs::read_dir(&d1)
        .unwrap()
        .map(|e| e.unwrap().file_name())
        .collect();
    names.sort();
    for n in names {
        let (x, y) = (
            fs::read(d1.join(&n)).unwrap(),
            fs::read(d2.join(&n)).unwrap(),
        );
        assert_eq!(x, y, "{n:?}");
        let a = parse_algebra(std::str::from_utf8(&x).unwrap()).unwrap();
        assert_eq!(algebra_to_json(&a).as_bytes(), &x[..], "round trip {n:?}");
        let (code, _, _) = invoke(&["validate", "-i", d1.join(&n).to_str().unwrap()]);
        // plus-diag-1-2 is not multiplicative by design
        let expect = if a.check_multiplicative() {
            EXIT_OK
        } else {
            EXIT_FAILED
        };
        assert_eq!(code, expect, "{n:?}");
    }
}

#[test]
fn quotient_of_dual_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(dir.path(), "dual.json", &algebra_to_json(&corpus::dual()));
    let (code, out, _) = invoke(&["quotient", "-i", &d, "--ideal", r#"[["0","1"]]"#, "-k", "2"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["target"]["dim"], 1);
    for verdict in v["verdicts"].as_array().unwrap() {
        assert!(verdict["status"] == "holds" || verdict["status"] == "not_applicable");
    }
    let (code, _, err) = invoke(&["quotient", "-i", &d, "--ideal", "[[1, 0]]"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("not a Hom-ideal"));
    assert_eq!(
        invoke(&["quotient", "-i", &d, "--ideal", "[[1]]"]).0,
        EXIT_INPUT
    );
}

#[test]
fn extend_and_centroid() {
    let dir = tempfile::tempdir().unwrap();
    let d = write(dir.path(), "dual.json", &algebra_to_json(&corpus::dual()));
    let (code, out, _) = invoke(&["extend", "-i", &d, "-k", "2"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["carrier"]["dim"], 4);
    assert!(v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|x| x["status"] == "holds"));

    let (code, out, _) = invoke(&[
        "centroid",
        "-i",
        &d,
        "-k",
        "1",
        "--ideal",
        r#"[["0","1"]]"#,
        "--envelope",
    ]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["mult_reading"], "envelope");
    assert!(v["composition_table"]["closed_within_bound"]
        .as_bool()
        .unwrap());
    let claims: Vec<&str> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x["claim_id"].as_str().unwrap())
        .collect();
    assert!(claims.contains(&"prop53.z_invariant"));
    assert!(claims.contains(&"thm54.1.homomorphism"));
}

#[test]
fn theorem_suites_and_atomic_output() {
    let dir = tempfile::tempdir().unwrap();
    let corpus_dir = dir.path().join("corpus");
    assert_eq!(
        invoke(&["gen", "-o", corpus_dir.to_str().unwrap()]).0,
        EXIT_OK
    );
    let report = dir.path().join("report.json");
    let (code, out, err) = invoke(&[
        "theorems",
        "--suite",
        "all",
        "-i",
        corpus_dir.to_str().unwrap(),
        "-k",
        "1",
        "-o",
        report.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK, "{err}");
    assert!(out.is_empty());
    let v = json(&fs::read_to_string(&report).unwrap());
    assert!(v.as_array().unwrap().len() >= 15);
    assert!(!err.contains("FAILS"));
    assert!(fs::read_dir(dir.path()).unwrap().all(|e| !e
        .unwrap()
        .file_name()
        .to_string_lossy()
        .ends_with(".tmp")));
}

#[test]
fn explore_reports_ungated_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(
        dir.path(),
        "p.json",
        &algebra_to_json(&corpus::plus_diag(&[1, 2])),
    );
    let (code, out, _) = invoke(&["theorems", "-i", &p, "-k", "1", "--explore"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    let sigma = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|x| x["claim_id"] == "prop31.c.sigma")
        .unwrap();
    assert_eq!(sigma["status"], "not_applicable");
    assert_eq!(sigma["ungated"], false);
    assert!(sigma["counterexample"].is_object());
}
