use std::fs;
use std::path::Path;
use std::process::Command;

use gspin_kit::{execute, request_of_report};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_gspin-kit"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend(args);
    let (code, out, err) = run(&full);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn write_store(dir: &Path, name: &str, lines: &[&str]) -> String {
    let p = dir.join(name);
    fs::write(&p, lines.join("\n") + "\n").unwrap();
    p.to_str().unwrap().to_owned()
}

const TRIVIAL: &str = r#"{"n":2,"q":2,"c":"1","a":["1","1"]}"#;
const SECOND: &str = r#"{"n":2,"q":3,"c":"6","a":["2","3"],"label":"b"}"#;

#[test]
fn conj_reports_all_conjugate_for_the_epsilon_pair() {
    let v = json(&[
        "conj",
        "--t1",
        r#"{"n":2,"c":"6","a":["2","3"]}"#,
        "--t2",
        r#"{"n":2,"c":"3","a":["1/2","3"]}"#,
    ]);
    let r = &v["result"];
    for k in [
        "gspin_conjugate",
        "steinberg_conjugate",
        "std_conjugate",
        "go_conjugate",
    ] {
        assert_eq!(r[k], Value::Bool(true), "{k}");
    }
    assert_eq!(r["criteria_agree"], Value::Bool(true));
}

#[test]
fn conj_identical_inputs_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.json");
    fs::write(&p, r#"{"n":3,"c":"-2","a":["5","1/7","-1"]}"#).unwrap();
    let p = p.to_str().unwrap();
    let v = json(&["conj", "--t1", p, "--t2", p]);
    assert_eq!(v["result"]["gspin_conjugate"], Value::Bool(true));
}

#[test]
fn conj_rejects_malformed_input() {
    assert_eq!(run(&["conj", "--t1", "{\"n\":2", "--t2", "{}"]).0, 2);
    let bad_len = r#"{"n":3,"c":"1","a":["1","1"]}"#;
    assert_eq!(run(&["conj", "--t1", bad_len, "--t2", bad_len]).0, 2);
    let zero = r#"{"n":1,"c":"0","a":["1"]}"#;
    assert_eq!(run(&["conj", "--t1", zero, "--t2", zero]).0, 2);
    assert_eq!(
        run(&["conj", "--t1", "/nonexistent/file", "--t2", "{}"]).0,
        2
    );
}

#[test]
fn lfactor_prints_exact_polynomials() {
    let dir = tempfile::tempdir().unwrap();
    let store = write_store(dir.path(), "s.jsonl", &[TRIVIAL, SECOND]);
    let (code, out, _) = run(&["lfactor", "--store", &store]);
    assert_eq!(code, 0);
    assert!(out.contains("(1-T)^4"), "{out}");
    assert!(out.contains("(1-T)(1-2T)(1-3T)(1-6T)"), "{out}");
    let v = json(&["lfactor", "--store", &store]);
    let coeffs: Vec<&str> = v["result"]["factors"][0]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1", "-4", "6", "-4", "1"]);
}

#[test]
fn lsum_multiplies_and_guards_convergence() {
    let dir = tempfile::tempdir().unwrap();
    let both = write_store(dir.path(), "both.jsonl", &[TRIVIAL, SECOND]);
    let one = write_store(dir.path(), "one.jsonl", &[TRIVIAL]);
    let two = write_store(dir.path(), "two.jsonl", &[SECOND]);
    let value = |store: &str| {
        json(&["lsum", "--store", store, "--s", "4"])["result"]["value"]
            .as_f64()
            .unwrap()
    };
    let (a, b, ab) = (value(&one), value(&two), value(&both));
    assert!((ab - a * b).abs() / ab < 1e-12);

    let (code, _, err) = run(&["lsum", "--store", &both, "--s", "2"]);
    assert_eq!(code, 4);
    assert!(err.contains("s > 2.63"), "{err}");
    // the cutoff drops the q = 3 record and with it the obstruction
    let (code, out, _) = run(&["lsum", "--store", &both, "--s", "2", "--cutoff", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("3.16049382716049382716049382"), "{out}");
}

#[test]
fn lsum_c_normalization_needs_one_rank() {
    let dir = tempfile::tempdir().unwrap();
    let mixed = write_store(
        dir.path(),
        "mixed.jsonl",
        &[TRIVIAL, r#"{"n":1,"q":5,"c":"1","a":["1"]}"#],
    );
    assert_eq!(
        run(&["lsum", "--store", &mixed, "--s", "9", "--c-normalize"]).0,
        2
    );
    let v = json(&["lsum", "--store", &mixed, "--s", "9"]);
    assert_eq!(v["result"]["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn weights_check_reports_the_ht2_pattern() {
    let (code, out, _) = run(&["weights", "check", "--n", "3", "--mu", "1,2,3"]);
    assert_eq!(code, 0);
    assert!(out.contains("HT2: FAIL (a=1,b=2)"), "{out}");
    assert!(out.contains("HT1: PASS"));
    let (_, out, _) = run(&["weights", "check", "--n", "3", "--mu", "-12,8,4"]);
    assert!(out.contains("HT1: FAIL (x=2)"), "{out}");
    let (_, out, _) = run(&["weights", "check", "--n", "3", "--mu", "1,2,4"]);
    assert!(out.contains("HT2: PASS"), "{out}");
    assert_eq!(run(&["weights", "check", "--n", "3", "--mu", "1,2"]).0, 2);
}

#[test]
fn weights_hodge_of_the_trivial_weight() {
    let v = json(&["weights", "hodge", "--n", "2", "--lambda", "0,0,0"]);
    let coords = &v["result"]["hodge"]["coords"];
    assert_eq!(coords, &serde_json::json!(["3/2", "2", "1"]));
    assert_eq!(
        run(&["weights", "hodge", "--n", "2", "--lambda", "0,0,1"]).0,
        2
    );
}

#[test]
fn classicality_bound_and_verdict() {
    let (code, out, _) = run(&["classicality", "--n", "2", "--w", "0,5,2", "--vbeta", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("bound: -12"), "{out}");
    assert!(out.contains("not below the bound"));
    let v = json(&[
        "classicality",
        "--n",
        "2",
        "--w",
        "0,5,-3",
        "--vbeta",
        "-1/2",
        "--eta",
        "0,1,2",
        "--cone",
        r#"{"functionals":[[0,0,-1],[0,1,-1]],"thresholds":["1","0"]}"#,
    ]);
    assert_eq!(v["result"]["bound"], "8");
    assert_eq!(v["result"]["classical"], Value::Bool(true));
    assert_eq!(v["result"]["admissible"], Value::Bool(true));
}

#[test]
fn g2_check_embeds_and_restricts() {
    let (code, out, _) = run(&["g2", "check", "--x", "9", "--y", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("embedding: (36; 9, 4, 36)"), "{out}");
    assert!(out.contains("8 = 7 + 1: PASS"));
    let v = json(&["g2", "check", "--x", "sqrt(3)", "--y", "-2"]);
    assert_eq!(v["result"]["multiset_ok"], Value::Bool(true));
    assert_eq!(run(&["g2", "check", "--x", "0", "--y", "1"]).0, 2);
}

#[test]
fn clifford_anticommutator_of_partner_generators() {
    let v = json(&["clifford", "mul", "--n", "3", "--a", "e1", "--b", "e7"]);
    assert_eq!(v["result"]["anticommutator_scalar"], "1");
    let v = json(&["clifford", "mul", "--n", "3", "--a", "e1", "--b", "e2"]);
    assert_eq!(v["result"]["anticommutator_scalar"], "0");
    let v = json(&[
        "clifford",
        "mul",
        "--n",
        "2",
        "--a",
        r#"{"n":2,"terms":{"3":"2"}}"#,
        "--b",
        "e3",
    ]);
    assert_eq!(v["result"]["product"]["terms"][""], "2");
    assert_eq!(
        run(&["clifford", "mul", "--n", "2", "--a", "e9", "--b", "e1"]).0,
        2
    );
}

#[test]
fn clifford_torus_norm_and_check() {
    let v = json(&["clifford", "torus", "--c", "6", "--a", "2,3"]);
    assert_eq!(v["result"]["spinor_norm"], "6");
    let element = serde_json::to_string(&v["result"]["element"]).unwrap();
    let n = json(&["clifford", "norm", "--n", "2", "--x", &element]);
    assert_eq!(n["result"]["spinor_norm"], "6");
    assert_eq!(n["result"]["similitude"], "36");
    let odd = json(&["clifford", "norm", "--n", "2", "--x", "e1"]);
    assert_eq!(odd["result"]["is_gspin"], Value::Bool(false));
    let a = json(&[
        "--seed",
        "7",
        "clifford",
        "check",
        "--n",
        "2",
        "--samples",
        "10",
    ]);
    assert_eq!(a["request"]["seed"], 7);
    assert_eq!(a["result"]["associativity"], Value::Bool(true));
}

#[test]
fn store_validate_and_ingest() {
    let dir = tempfile::tempdir().unwrap();
    let store = dir.path().join("store.jsonl");
    let store_s = store.to_str().unwrap();
    let input = write_store(dir.path(), "in.jsonl", &[TRIVIAL, SECOND]);
    let v = json(&["store", "ingest", "--store", store_s, "--input", &input]);
    assert_eq!(v["result"]["records"], 2);
    // re-ingesting the same records hits the (q, label) uniqueness check
    let before = fs::read_to_string(&store).unwrap();
    let (code, _, err) = run(&["store", "ingest", "--store", store_s, "--input", &input]);
    assert_eq!(code, 2);
    assert!(err.contains("duplicate"), "{err}");
    assert_eq!(fs::read_to_string(&store).unwrap(), before);
    let v = json(&["store", "validate", "--store", store_s]);
    assert_eq!(v["result"]["primes"], serde_json::json!([2, 3]));

    let broken = write_store(dir.path(), "broken.jsonl", &[TRIVIAL, "{\"n\":2,"]);
    let (code, _, err) = run(&["store", "validate", "--store", &broken]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let extra = write_store(
        dir.path(),
        "extra.jsonl",
        &[r#"{"n":1,"q":2,"c":"1","a":["1"],"x":1}"#],
    );
    assert_eq!(run(&["store", "validate", "--store", &extra]).0, 2);
    let not_prime = write_store(
        dir.path(),
        "np.jsonl",
        &[r#"{"n":1,"q":6,"c":"1","a":["1"]}"#],
    );
    assert_eq!(run(&["store", "validate", "--store", &not_prime]).0, 2);
}

#[test]
fn json_reports_replay_identically() {
    let dir = tempfile::tempdir().unwrap();
    let store = write_store(dir.path(), "s.jsonl", &[TRIVIAL, SECOND]);
    let cases: Vec<Vec<&str>> = vec![
        vec![
            "conj",
            "--t1",
            r#"{"n":1,"c":"-1","a":["2"]}"#,
            "--t2",
            r#"{"n":1,"c":"1","a":["2"]}"#,
        ],
        vec!["lsum", "--store", &store, "--s", "7/2", "--rep", "std"],
        vec!["weights", "check", "--n", "2", "--mu", "4,2", "--c0", "1/2"],
        vec!["g2", "check", "--x", "2", "--y", "1/3"],
        vec![
            "clifford",
            "mul",
            "--n",
            "2",
            "--a",
            "1/2*e1*e2 + 3",
            "--b",
            "e5",
        ],
    ];
    for args in cases {
        let mut full = vec!["--json"];
        full.extend(&args);
        let (code, out, err) = run(&full);
        assert_eq!(code, 0, "{args:?}: {err}");
        let req = request_of_report(&out).unwrap();
        assert_eq!(execute(&req).unwrap().to_json(), out.trim_end(), "{args:?}");
    }
}

#[test]
fn usage_errors_and_thread_configuration() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["lsum", "--store", "/nonexistent", "--s", "3"]).0, 2);
    let args = ["weights", "check", "--n", "1", "--mu", "2"];
    assert_eq!(run_env(&args, &[("GSPIN_KIT_THREADS", "0")]).0, 2);
    assert_eq!(run_env(&args, &[("GSPIN_KIT_THREADS", "many")]).0, 2);
    let (code, out, _) = run_env(&args, &[("GSPIN_KIT_THREADS", "2")]);
    assert_eq!(code, 0);
    assert!(out.contains("HT1: FAIL (x=1)"), "{out}");
}

#[test]
fn mixed_quadratic_fields_are_usage_errors() {
    for args in [
        vec!["g2", "check", "--x", "sqrt(2)", "--y", "sqrt(3)"],
        vec!["clifford", "torus", "--c", "sqrt(2)", "--a", "sqrt(5)"],
        vec![
            "clifford",
            "mul",
            "--n",
            "1",
            "--a",
            "sqrt(2)*e1",
            "--b",
            "sqrt(3)*e2",
        ],
        vec![
            "conj",
            "--t1",
            r#"{"n":1,"c":"sqrt(2)","a":["sqrt(3)"]}"#,
            "--t2",
            r#"{"n":1,"c":"1","a":["1"]}"#,
        ],
    ] {
        let (code, _, err) = run(&args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(err.contains("sqrt(2)"), "{err}");
    }
}
