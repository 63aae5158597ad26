use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn nbhd(args: &[&str], files: &[&str]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_nbhd"));
    cmd.args(args);
    for f in files {
        cmd.arg(data(f));
    }
    cmd.output().expect("binary runs")
}

fn json(args: &[&str], files: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = nbhd(&all, files);
    let code = out.status.code().expect("exit code");
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

const STRUCTURES: &[&str] = &["lattices.json", "structures.json"];

#[test]
fn classify_reports_class_and_witness() {
    let (code, v) = json(&["classify", "--target", "nabla"], STRUCTURES);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["class"], "Nbhd (Topology)");
    assert_eq!(v["result"]["opens"], serde_json::json!(["0", "1"]));

    let (code, v) = json(&["classify", "--target", "mu_bad"], STRUCTURES);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["class"], "Pre");
    assert!(v["result"]["witness"]
        .as_str()
        .unwrap()
        .contains("interpolation"));

    let (_, v) = json(&["classify", "--target", "mu_c"], STRUCTURES);
    assert_eq!(v["result"]["class"], "Weak");
    assert!(v["result"]["witness"]
        .as_str()
        .unwrap()
        .contains("empty join"));
}

#[test]
fn classify_expectation_sets_exit_code() {
    let (code, _) = json(
        &["classify", "--target", "mu_c", "--expect", "weak"],
        STRUCTURES,
    );
    assert_eq!(code, 0);
    let (code, v) = json(
        &["classify", "--target", "mu_c", "--expect", "Nbhd"],
        STRUCTURES,
    );
    assert_eq!(code, 1);
    assert_eq!(v["verdicts"][0]["witness"], serde_json::json!(["Weak"]));
}

#[test]
fn convert_between_facets() {
    let (code, v) = json(
        &["convert", "--target", "identity", "--to", "nbhd"],
        STRUCTURES,
    );
    assert_eq!(code, 0);
    let rows = &v["result"]["spec"]["payload"]["neighbourhoods"];
    assert_eq!(rows["a"], serde_json::json!(["a", "1"]));
    assert_eq!(rows["0"], serde_json::json!(["0", "a", "b", "1"]));

    let (code, v) = json(
        &[
            "convert",
            "--target",
            "opens",
            "--to",
            "kuratowski",
            "--round-trip",
        ],
        STRUCTURES,
    );
    assert_eq!(code, 0);
    assert_eq!(v["result"]["spec"]["payload"]["map"]["a"], "0");
    assert_eq!(v["verdicts"][0]["check"], "round-trip");
    assert_eq!(v["verdicts"][0]["pass"], true);

    let out = nbhd(
        &["convert", "--target", "mu_bad", "--to", "pfs"],
        STRUCTURES,
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a neighbourhood"));
}

#[test]
fn enumerate_counts() {
    let count = |target: &str, files: &[&str]| {
        let mut args = vec!["enumerate", "--class", "Nbhd", "--count-only"];
        if !target.is_empty() {
            args.extend(["--target", target]);
        }
        json(&args, files).1["result"]["count"].as_u64().unwrap()
    };
    assert_eq!(count("B2", &["lattices.json"]), 4);
    assert_eq!(count("C3", &["lattices.json"]), 2);
    assert_eq!(count("", &["three.json"]), 29);
}

#[test]
fn enumerate_respects_the_lattice_cap() {
    let out = nbhd(
        &["--cap-lattice", "4", "enumerate", "--class", "Nbhd"],
        &["three.json"],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn reflections() {
    let (code, v) = json(&["reflect", "--target", "mu_c", "--weak"], STRUCTURES);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["unchanged"], true);

    let (code, v) = json(&["reflect", "--target", "mu_c", "--nbhd"], STRUCTURES);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["class"], "Nbhd (Topology)");
    assert_eq!(v["result"]["below_input"], false);

    let (code, v) = json(&["reflect", "--target", "nabla", "--top"], STRUCTURES);
    assert_eq!(code, 0);
    assert!(v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["pass"] == true));

    let (code, _) = json(&["reflect", "--target", "mu_bad", "--nbhd"], STRUCTURES);
    assert_eq!(code, 2);
}

#[test]
fn morphism_checks() {
    let (code, v) = json(&["morphism", "--target", "discrete"], &["finset.json"]);
    assert_eq!(code, 0);
    let checks: Vec<&str> = v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["check"].as_str().unwrap())
        .collect();
    for name in ["prenbhd", "pseudo-open", "frobenius", "ppj"] {
        assert!(checks.contains(&name), "{name}");
    }

    let (code, v) = json(
        &["morphism", "--target", "id-bundle", "--check", "ppj"],
        &["frames.json"],
    );
    assert_eq!(code, 0);
    assert_eq!(v["result"]["backend"], "localic");
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 1);

    let (code, _) = json(
        &["morphism", "--target", "quotient", "--check", "prenbhd"],
        &["finset.json"],
    );
    assert_eq!(code, 2);
}

#[test]
fn regular_epis() {
    let (code, v) = json(
        &["regepi", "--target", "quotient", "--hereditary"],
        &["finset.json"],
    );
    assert_eq!(code, 0);
    assert_eq!(v["result"]["regular_epi"], true);
    assert!(v["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .any(|c| c["check"] == "hereditary/computations-agree"));

    let (code, v) = json(&["regepi", "--target", "inclusion"], &["finset.json"]);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["regular_epi"], false);

    let (code, _) = json(&["regepi", "--target", "id-bundle"], &["frames.json"]);
    assert_eq!(code, 2);
}

#[test]
fn locales() {
    let (code, v) = json(
        &["locale", "--target", "C2", "--natural-topology"],
        &["frames.json"],
    );
    assert_eq!(code, 0);
    assert_eq!(v["result"]["sublocales"].as_array().unwrap().len(), 2);
    assert_eq!(v["result"]["class"], "Nbhd (Topology)");

    let (code, v) = json(&["locale", "--target", "C3"], &["frames.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["open_sublocales"].as_object().unwrap().len(), 3);

    let (code, v) = json(&["locale", "--right-inverse"], &["frames.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["counts"][0]["value"], 2);
}

#[test]
fn output_is_byte_stable() {
    let a = nbhd(
        &["enumerate", "--target", "B2", "--class", "Pre"],
        &["lattices.json"],
    );
    let b = nbhd(
        &["enumerate", "--target", "B2", "--class", "Pre"],
        &["lattices.json"],
    );
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn input_errors_exit_with_two() {
    let dir = std::env::temp_dir().join(format!("nbhd-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        (
            "typo.json",
            r#"{"kind": "lattice", "name": "L", "payload": {"elements": ["0"], "leq": [], "extra": 1}}"#,
        ),
        (
            "kind.json",
            r#"{"kind": "poset", "name": "L", "payload": {}}"#,
        ),
        ("broken.json", r#"{"kind": "lattice""#),
        (
            "dangling.json",
            r#"{"kind": "prenbhd", "name": "p", "payload": {"carrier": "missing", "preset": "nabla"}}"#,
        ),
        (
            "nondistributive.json",
            r#"{"kind": "prenbhd", "name": "p", "payload": {"carrier": {"elements": ["0","a","b","c","1"],
               "leq": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]}, "preset": "nabla"}}"#,
        ),
    ];
    for (name, text) in cases {
        let path = dir.join(name);
        std::fs::write(&path, text).unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_nbhd"))
            .arg("classify")
            .arg(&path)
            .output()
            .unwrap();
        assert_eq!(
            out.status.code(),
            Some(2),
            "{name}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    std::fs::remove_dir_all(&dir).ok();

    let out = nbhd(&["classify"], STRUCTURES);
    assert_eq!(
        out.status.code(),
        Some(2),
        "several candidates without --target"
    );
    let out = nbhd(&["frobnicate"], &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = json(&["locale", "--target", "C2"], &["frames.json"]);
    assert!(v.get("timing_ms").is_none());
    let (_, v) = json(&["--timing", "locale", "--target", "C2"], &["frames.json"]);
    assert!(v["timing_ms"].is_number());
}
