use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_dissrho"));
    c.env_remove("DISSRHO_WORKERS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema")
}

fn assert_schema(name: &str, value: &Value) {
    let path = schema_dir().join(format!("{name}.schema.json"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).expect("schema compiles");
    let errors: Vec<String> = validator
        .iter_errors(value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

/// Plain graph6 writer for orders below 63.
fn graph6(n: usize, edges: &[(usize, usize)]) -> String {
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(
                edges
                    .iter()
                    .any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i)),
            );
        }
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for k in 0..6 {
            v = v << 1 | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        out.push((v + 63) as char);
    }
    out
}

#[test]
fn rho_of_star() {
    let star9: Vec<(usize, usize)> = (1..=9).map(|v| (0, v)).collect();
    let v = json(&["rho", &graph6(10, &star9)]);
    assert!((v["rho"].as_f64().unwrap() - 3.0).abs() < 1e-10);
    assert_schema("rho", &v);
    let spec = json(&["rho", "G(1,0,0;6,5,6)"]);
    assert_eq!(spec["n"], 42);
    assert_schema("rho", &spec);
}

#[test]
fn diss_of_path_from_stdin() {
    let p7: Vec<(usize, usize)> = (0..6).map(|v| (v, v + 1)).collect();
    let mut child = bin()
        .args(["--format", "json", "diss"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    writeln!(child.stdin.take().unwrap(), "{}", graph6(7, &p7)).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["diss"], 5);
    let witness: Vec<usize> = serde_json::from_value(v["witness"].clone()).unwrap();
    assert_eq!(witness.len(), 5);
    for w in witness.windows(3) {
        // No vertex with both path neighbours in the set.
        assert!(!(w[1] == w[0] + 1 && w[2] == w[1] + 1));
    }
    assert_schema("diss", &v);
}

#[test]
fn family_build_and_reduced_solve() {
    let v = json(&[
        "family", "build", "--type", "g", "--a", "1", "--p", "6", "--q", "5", "--r", "6",
    ]);
    assert_eq!(v["n"], 42);
    assert!(v["dot"].as_str().unwrap().starts_with("graph"));
    assert_schema("family", &v);
    let r = json(&["reduced", "solve", "--spec", "G(0,0,0;2,1,2)"]);
    assert!(r["abs_diff"].as_f64().unwrap() < 1e-9);
    assert_schema("reduced", &r);
}

#[test]
fn verify_remark_prints_three_passes() {
    let o = run(&["verify", "remark"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for n in [5, 6, 7] {
        assert!(text.contains(&format!("PASS n={n}:")), "{text}");
    }
    let v = json(&["verify", "small-cases"]);
    assert_eq!(v["passed"], true);
    assert_schema("report", &v);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["rho", "not graph6 !"]).status.code(), Some(2));
    assert_eq!(
        run(&["--tolerance", "0", "verify", "star"]).status.code(),
        Some(2)
    );
    assert_eq!(
        bin()
            .env("DISSRHO_WORKERS", "0")
            .args(["verify", "star"])
            .status()
            .unwrap()
            .code(),
        Some(2)
    );
    // sqrt(t) cannot be matched to 1e-300 for every t.
    let o = run(&["--tolerance", "1e-300", "verify", "star"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
    assert_eq!(run(&["verify", "star"]).status.code(), Some(0));
}

#[test]
fn aliases_are_accepted() {
    for args in [["verify", "lemma14"], ["verify", "cor15"]] {
        assert_eq!(run(&args).status.code(), Some(0), "{args:?}");
    }
    let v = json(&["theorem1", "--n", "42"]);
    assert_eq!(v["spec"], "G(1,0,0;6,5,6)");
    assert_schema("extremal", &v);
}

#[test]
fn extremal_confirmation() {
    let v = json(&["extremal", "--n", "17", "--confirm"]);
    assert_eq!(v["status"], "confirmed");
    assert_eq!(v["method"], "tree-search");
    assert_schema("extremal", &v);
    let v = json(&["extremal", "--n", "45", "--confirm"]);
    assert_eq!(v["spec"], "G(0,0,0;7,5,7)");
    assert_eq!(v["status"], "confirmed");
}

#[test]
fn search_outputs_match_schemas() {
    let v = json(&["search", "trees", "--n", "10", "--psi", "7"]);
    assert_eq!(v["graphs_examined"], 106);
    assert_schema("search-result", &v);
    let f = json(&["search", "family", "--n", "40"]);
    assert_eq!(f["h_wins"], false);
    assert_schema("family-search-result", &f);
    let all = json(&["verify", "all"]);
    assert_eq!(all["passed"], true);
    assert_schema("verify-all", &all);
}

#[test]
fn interrupted_search_resumes_to_the_same_result() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let full = json(&["search", "trees", "--n", "14"]);

    let o = run(&[
        "--output-dir",
        out,
        "--workers",
        "1",
        "search",
        "trees",
        "--n",
        "14",
        "--max-chunks",
        "3",
    ]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let ckpt = dir.path().join("checkpoints/trees-n14-psi11");
    let cursor: Value =
        serde_json::from_str(&std::fs::read_to_string(ckpt.join("cursor.json")).unwrap()).unwrap();
    assert_schema("cursor", &cursor);
    assert!(cursor["next_chunk"].as_u64().unwrap() >= 3);

    let resumed = json(&["--output-dir", out, "search", "trees", "--n", "14"]);
    for key in [
        "winner",
        "ties",
        "near_minimal",
        "graphs_examined",
        "candidates_examined",
    ] {
        assert_eq!(resumed[key], full[key], "{key}");
    }
    let records = std::fs::read_to_string(ckpt.join("records.jsonl")).unwrap();
    for line in records.lines() {
        assert_schema("search-record", &serde_json::from_str(line).unwrap());
    }
    assert!(dir.path().join("search-trees-n14-psi11.json").exists());
}
