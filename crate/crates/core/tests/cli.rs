use std::path::Path;
use std::process::{Command, Output};

use ordmatch::load_instance;

fn ordmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordmatch")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn figure2_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let f8 = dir.path().join("f8.json");
    assert_eq!(ordmatch(&["gen", "--kind", "figure2", "--n", "8", "--out", path(&f8)]).status.code(), Some(0));

    let oracle = ordmatch(&["oracle", "--instance", path(&f8)]);
    assert_eq!(oracle.status.code(), Some(0));
    assert_eq!(json(&oracle)["opt_weight"], 10.0);

    let verify = ordmatch(&["verify", "--instance", path(&f8)]);
    let v = json(&verify);
    assert_eq!(v["metric"], true);
    assert_eq!(v["beta"], 3.0);

    let run = ordmatch(&[
        "run",
        "--alg",
        "rsd",
        "--instance",
        path(&f8),
        "--alpha",
        "1",
        "--trials",
        "100000",
        "--seed",
        "7",
    ]);
    assert_eq!(run.status.code(), Some(0));
    let report = json(&run);
    assert_eq!(report["pass"], true);
    assert_eq!(report["trials"], 100_000);
    assert!(!String::from_utf8_lossy(&run.stderr).is_empty());
}

#[test]
fn generated_instances_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for kind in ["euclidean", "metric-closure", "beta-bounded", "lb-one-sided", "lb-two-sided", "figure2"] {
        let file = dir.path().join(format!("{kind}.json"));
        let out = ordmatch(&["gen", "--kind", kind, "--n", "6", "--seed", "3", "--out", path(&file)]);
        assert_eq!(out.status.code(), Some(0), "{kind}: {}", String::from_utf8_lossy(&out.stderr));
        let bytes = std::fs::read(&file).unwrap();
        let inst = load_instance(&bytes).unwrap();
        let again = load_instance(inst.to_json().as_bytes()).unwrap();
        for (a, b) in inst.rows().iter().flatten().zip(again.rows().iter().flatten()) {
            assert!((a - b).abs() <= 1e-12);
        }
    }
}

#[test]
fn generation_is_reproducible() {
    let a = ordmatch(&["gen", "--kind", "metric-closure", "--n", "5", "--seed", "9"]);
    let b = ordmatch(&["gen", "--kind", "metric-closure", "--n", "5", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn validation_errors_exit_one_and_name_the_flag() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 2, "weights": [[1, 2]]}"#).unwrap();
    let f = dir.path().join("f.json");
    ordmatch(&["gen", "--kind", "figure2", "--n", "4", "--out", path(&f)]);

    let cases: [(&[&str], &str); 5] = [
        (&["oracle", "--instance", path(&bad)], "--instance"),
        (&["run", "--alg", "rsd", "--instance", path(&f), "--alpha", "0.5", "--seed", "1"], "--alpha"),
        (&["run", "--alg", "greedy", "--instance", path(&f), "--seed", "1"], "--alg"),
        (&["run", "--alg", "rsd", "--instance", path(&f), "--alpha", "2", "--seed", "1"], "--alpha"),
        (&["gen", "--kind", "euclidean", "--n", "4"], "--seed"),
    ];
    for (args, flag) in cases {
        let out = ordmatch(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let stderr = String::from_utf8_lossy(&out.stderr);
        assert!(stderr.contains(flag), "{args:?}: {stderr}");
        assert_eq!(stderr.trim().lines().count(), 1, "{args:?}: {stderr}");
    }
    assert_eq!(ordmatch(&["run", "--bogus"]).status.code(), Some(1));
}

#[test]
fn failed_check_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("f.json");
    ordmatch(&["gen", "--kind", "figure2", "--n", "6", "--out", path(&f)]);
    // judged against weights within a factor 1, random matching must hit OPT
    let out =
        ordmatch(&["run", "--alg", "random", "--instance", path(&f), "--beta", "1", "--trials", "200", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["pass"], false);
}

#[test]
fn curve_csv_is_thread_independent() {
    let args = ["curve", "--model", "total-order", "--n", "8", "--instances", "3", "--trials", "200", "--seed", "4"];
    let one = ordmatch(&[&args[..], &["--threads", "1"]].concat());
    let many = ordmatch(&[&args[..], &["--threads", "8"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let csv = String::from_utf8(one.stdout).unwrap();
    assert!(csv.starts_with("model,alpha,empirical_ratio,theoretical_bound,std_err,trials,instances\n"));
    assert_eq!(csv.lines().count(), 6);
}

#[test]
fn lemmas_and_lower_bounds() {
    let lemmas = ordmatch(&["lemmas", "--seed", "42"]);
    assert_eq!(lemmas.status.code(), Some(0));
    assert_eq!(json(&lemmas)["checks"].as_array().unwrap().len(), 5);

    let two = json(&ordmatch(&["lowerbound", "--kind", "lb-two-sided", "--epsilon", "1e-6"]));
    assert!((two["p_star"].as_f64().unwrap() - 0.5).abs() < 1e-3);
    let one = json(&ordmatch(&["lowerbound", "--kind", "lb-one-sided", "--n", "1000"]));
    assert!((one["approximation_factor"].as_f64().unwrap() - 1.618).abs() < 0.01);
}

#[test]
fn logging_goes_to_stderr_only() {
    let out = Command::new(env!("CARGO_BIN_EXE_ordmatch"))
        .args(["gen", "--kind", "figure2", "--n", "3"])
        .env("ORDMATCH_LOG", "debug")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["n"], 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("figure2-n3"));
}
