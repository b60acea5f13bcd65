use std::process::Command;

use serde_json::Value;
use spheremap_cli::{run, Outcome};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("spheremap").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = cli(&all);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {out:?}"));
    (out.code, v)
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("spheremap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn analyze_cubic_homogeneous_map() {
    let (code, v) = json(&["analyze", "H(2,3)"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "spheremap-report/1");
    let d = &v["result"]["deformations"];
    assert_eq!(d["real_dimension"], 64);
    assert_eq!(v["result"]["rigid"], false);
    assert_eq!(v["result"]["consistency"], serde_json::json!([]));
}

#[test]
fn analyze_g1_is_rigid() {
    let (code, v) = json(&["analyze", "G(1)"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["rigid"], true);
    assert_eq!(v["result"]["deformations"]["nontrivial_dimension"], 0);
}

#[test]
fn pencil_is_degenerate() {
    let (code, v) = json(&["classify", "pencil", "--cos", "3/5", "--sin", "4/5"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["holomorphically_nondegenerate"], false);
    assert_eq!(v["result"]["degeneracy_witness"]["text"], "(0, 1, -3/4*z, -3/4*w)");
    let (code, _) = json(&["classify", "pencil", "--cos", "1/2", "--sin", "1/2"]);
    assert_eq!(code, 1);
}

#[test]
fn reflection_matrix_text_is_aligned() {
    let out = cli(&["reflection-matrix", "quartic"]);
    assert_eq!(out.code, 0);
    assert!(
        out.stdout.contains("z^4     | 1  0    0                0\n"),
        "{}",
        out.stdout
    );
    assert!(out.stdout.contains("w^4     | 0  0    0                w\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["analyze", "isolated", "--json"],
        vec!["stratify", "quartic"],
        vec!["hol", "whitney", "--json"],
        vec!["degeneracy", "quartic", "--point", "3/5,0,4/5,0", "--point", "1,0,0,0"],
    ] {
        let a = cli(&args);
        let b = cli(&args);
        assert_eq!(a, b);
        assert_eq!(a.code, 0);
    }
}

#[test]
fn malformed_input_exits_with_one() {
    assert_eq!(cli(&["classify", "nonsense"]).code, 1);
    assert_eq!(cli(&["classify", "H(2)"]).code, 1);
    assert_eq!(cli(&["degeneracy", "quartic", "--point", "1,0,1,0"]).code, 1);
    assert_eq!(cli(&["degeneracy", "quartic", "--point", "1,0"]).code, 1);
    assert_eq!(cli(&["xfiber", "quartic", "--point", "a,b,c,d"]).code, 1);
    assert_eq!(cli(&["frobnicate"]).code, 1);
    let (code, v) = json(&["analyze", "juxt(H(2,1),H(2,2),2)"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("not in [0, 1]"));
}

#[test]
fn non_sphere_map_exits_with_two() {
    let path = temp_file(
        "bad.json",
        r#"{"n": 2, "m": 2, "numerator": [
            [{"holo": [1, 0], "anti": [0, 0], "coeff": {"re": {"terms": [{"sqrt": 1, "num": 2, "den": 1}]}, "im": {"terms": []}}}],
            [{"holo": [0, 1], "anti": [0, 0], "coeff": {"re": {"terms": [{"sqrt": 1, "num": 1, "den": 1}]}, "im": {"terms": []}}}]
        ]}"#,
    );
    let (code, v) = json(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["result"]["valid"], false);
}

#[test]
fn map_files_round_trip() {
    let h = spheremap::maps::whitney_map();
    let path = temp_file("whitney.json", &serde_json::to_string(&h.to_json()).unwrap());
    let (code, v) = json(&["hol", path.to_str().unwrap(), "--no-basis"]);
    assert_eq!(code, 0);
    assert_eq!(v["map"]["key"], "whitney");
    assert_eq!(v["result"]["rigid"], true);
    assert!(v["result"].get("basis").is_none());
}

#[test]
fn jet_cap_exits_with_three() {
    let (code, v) = json(&["degeneracy", "quartic", "--point", "0,0,1,0", "--max-order", "1"]);
    assert_eq!(code, 3);
    assert_eq!(v["result"][0]["inconclusive"], true);
    assert_eq!(v["result"][0]["kernel_dim"], 0);
}

#[test]
fn degeneracy_defaults_to_the_generic_witness() {
    let (code, v) = json(&["degeneracy", "G(2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"].as_array().unwrap().len(), 1);
    assert_eq!(v["result"][0]["kernel_dim"], 0);
    assert_eq!(v["result"][0]["methods_agree"], true);
}

#[test]
fn hol_check_reports_membership_and_triviality() {
    // A nontrivial deformation of H(2,2) and a vector that is not a deformation.
    let good = temp_file("good.json", r#"["w", "-sqrt(2)/2*z^3", "-z^2*w"]"#);
    let (code, v) = json(&["hol", "H(2,2)", "--check", good.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["in_hol"], true);
    assert_eq!(v["result"]["trivial"], false);

    let trivial = temp_file("trivial.json", r#"["i*z^2", "i*sqrt(2)*z*w", "i*w^2"]"#);
    let (_, v) = json(&["hol", "H(2,2)", "--check", trivial.to_str().unwrap()]);
    assert_eq!(v["result"]["trivial"], true);

    let bad = temp_file("bad_vector.json", r#"["z", "0", "0"]"#);
    let (_, v) = json(&["hol", "H(2,2)", "--check", bad.to_str().unwrap()]);
    assert_eq!(v["result"]["in_hol"], false);
    assert_eq!(v["result"]["trivial"], Value::Null);

    let short = temp_file("short.json", r#"["z"]"#);
    assert_eq!(cli(&["hol", "H(2,2)", "--check", short.to_str().unwrap()]).code, 1);
}

#[test]
fn xfiber_over_the_degenerate_locus() {
    let (code, v) = json(&["xfiber", "quartic", "--point", "1,0,0,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dim"], 1);
    let (_, v) = json(&["xfiber", "quartic", "--point", "0,0,1,0"]);
    assert_eq!(v["result"]["dim"], 0);
}

#[test]
fn timing_is_opt_in() {
    let (_, v) = json(&["classify", "whitney"]);
    assert!(v.get("timing_ms").is_none());
    let (_, v) = json(&["classify", "whitney", "--timing"]);
    assert!(v["timing_ms"].is_array());
}

#[test]
fn catalog_run_through_the_binary_is_thread_independent() {
    let exe = env!("CARGO_BIN_EXE_spheremap");
    let one = Command::new(exe)
        .args(["catalog", "--run", "--json"])
        .env("SPHEREMAP_THREADS", "1")
        .output()
        .unwrap();
    let four = Command::new(exe)
        .args(["catalog", "--run", "--json"])
        .env("SPHEREMAP_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    for row in v["result"].as_array().unwrap() {
        assert_eq!(row["valid"], true, "{}", row["key"]);
        assert_eq!(row["consistency"], serde_json::json!([]), "{}", row["key"]);
    }
    let bad = Command::new(exe)
        .args(["catalog"])
        .env("SPHEREMAP_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}
