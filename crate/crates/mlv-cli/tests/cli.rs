//! End-to-end runs of the `mlv` binary.

use std::process::{Command, Output};

use serde_json::Value;

fn mlv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mlv")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

fn ranks(v: &Value) -> Vec<u64> {
    v.as_array().unwrap().iter().map(|r| r["rank"].as_u64().unwrap()).collect()
}

#[test]
fn tables_r1_deriv_check_passes() {
    let o = mlv(&["tables", "--r", "1", "--weights", "3..8", "--family", "deriv", "--check"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(ranks(&v), [1, 2, 5, 10, 22, 44]);
    assert!(v.as_array().unwrap().iter().all(|r| r["status"] == "match"));
}

#[test]
fn tables_r2_ext_check_passes() {
    let o = mlv(&["tables", "--r", "2", "--weights", "3..6", "--family", "ext", "--check"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ranks(&json(&o)), [4, 14, 48, 150]);
}

#[test]
fn tables_r6_all_families_csv() {
    let o = mlv(&["tables", "--r", "6", "--weights", "3..3", "--family", "all", "--check", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "family,r,weight,rank,basis_count,expected,status\n\
         deriv,6,3,36,252,36,match\n\
         ext,6,3,36,252,36,match\n\
         lin,6,3,36,252,36,match\n"
    );
}

#[test]
fn tables_output_is_ordered_by_family_then_weight() {
    let o = mlv(&["tables", "--r", "1", "--weights", "3..5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let keys: Vec<(String, u64)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["family"].as_str().unwrap().to_string(), r["weight"].as_u64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_by_key(|(f, w)| (["deriv", "ext", "lin"].iter().position(|x| x == f), *w));
    assert_eq!(keys, sorted);
    assert_eq!(keys.len(), 9);
    // Without --check the comparison fields are empty.
    assert!(v[0]["status"].is_null() && v[0]["expected"].is_null());
}

#[test]
fn tables_check_marks_unpublished_cells_without_failing() {
    // Weight 2 lies before the first published column.
    let o = mlv(&["tables", "--r", "1", "--weights", "2..3", "--family", "ext", "--check", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "family,r,weight,rank,basis_count,expected,status\next,1,2,0,1,,unpublished\next,1,3,1,2,1,match\n");
}

#[test]
fn resource_cap_exits_3_and_force_overrides_the_row_cap() {
    let o = mlv(&["tables", "--r", "4", "--weights", "5", "--family", "deriv"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--force"));
    assert!(o.stdout.is_empty());

    let o = mlv(&["tables", "--r", "1", "--weights", "6", "--family", "lin", "--max-rows", "10"]);
    assert_eq!(o.status.code(), Some(3));
    let o = mlv(&["tables", "--r", "1", "--weights", "6", "--family", "lin", "--max-rows", "10", "--force"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ranks(&json(&o)), [10]);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["tables", "--weights", "x"][..],
        &["tables", "--weights", "8..3"],
        &["tables", "--weights", "3..4", "--family", "nope"],
        &["tables", "--r", "0", "--weights", "3"],
        &["frobnicate"],
        &["verify", "--suite", "nope"],
        &["verify", "--cases", "0"],
        &["eval", "--word", "1:0"],
        &["eval", "--word", "2:x"],
        &["newton", "--r", "4", "--word", "1:1", "--z", "0.5"],
    ] {
        let o = mlv(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn relations_r1_weight4_lin_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rel.json");
    let o = mlv(&["relations", "--r", "1", "--weight", "4", "--family", "lin", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["family"], "lin");
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("rank 2"));
}

#[test]
fn relations_csv_lists_coefficients() {
    let o = mlv(&["relations", "--r", "1", "--weight", "3", "--family", "deriv", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    // ∂_1(xy) = xy·y − x·xy: ζ(2,1) − ζ(3).
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("row,provenance,word,coeff"));
    let body: Vec<&str> = lines.collect();
    assert_eq!(body.len(), 2);
    assert!(body.iter().any(|l| l.ends_with(",2:0,1:0,1") || l.ends_with(",\"2:0,1:0\",1")));
    assert!(body.iter().any(|l| l.ends_with(",3:0,-1")));
}

#[test]
fn eval_zeta_two() {
    let o = mlv(&["eval", "--r", "1", "--word", "2:0", "--m", "1000000"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let est = v["estimate_re"].as_f64().unwrap();
    assert!((est - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-5);
    assert_eq!(v["m_max"], 1_000_000);
    assert_eq!(v["accel"], "aitken");
    assert!(v["error_proxy"].as_f64().unwrap() >= 0.0);
}

#[test]
fn eval_alternating_harmonic_at_r2() {
    // ζ_2 = −1: L^*(1; 1) = Σ (−1)^m / m = −log 2.
    let o = mlv(&["eval", "--r", "2", "--word", "1:1", "--m", "200000", "--kind", "ast"]);
    assert_eq!(o.status.code(), Some(0));
    let est = json(&o)["estimate_re"].as_f64().unwrap();
    assert!((est + std::f64::consts::LN_2).abs() < 1e-6, "{est}");
}

#[test]
fn newton_example_is_finite() {
    let o = mlv(&["newton", "--word", "1:0", "--z", "-0.5", "--terms", "2000"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let (re, im, proxy) =
        (v["estimate_re"].as_f64().unwrap(), v["estimate_im"].as_f64().unwrap(), v["error_proxy"].as_f64().unwrap());
    assert!(re.is_finite() && im.is_finite() && proxy.is_finite());
    assert!(proxy < 1e-3);
    assert_eq!(v["terms"], 2000);
}

#[test]
fn newton_at_integer_reproduces_the_sequence() {
    // Sums are indexed from m = 0: the pinned sequence of y_1 is 1/(m+1).
    let o = mlv(&["newton", "--word", "1:1", "--rational", "--z", "3", "--terms", "40", "--accel", "none"]);
    assert_eq!(o.status.code(), Some(0));
    let est = json(&o)["estimate_re"].as_f64().unwrap();
    assert!((est - 0.25).abs() < 1e-9, "{est}");
}

#[test]
fn verify_inversion_passes() {
    let o = mlv(&["verify", "--suite", "inversion", "--cases", "10", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["gating_failures"], 0);
    assert_eq!(v["seed"], 7);
    for p in v["properties"].as_array().unwrap() {
        assert_eq!(p["suite"], "inversion");
        assert_eq!(p["passed"], p["cases"]);
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["verify", "--suite", "products", "--cases", "5", "--seed", "11", "--format", "csv"][..],
        &["tables", "--r", "2", "--weights", "3..5", "--family", "all"],
        &["relations", "--r", "2", "--weight", "4", "--family", "ext"],
    ] {
        let a = mlv(args);
        let b = mlv(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn seed_is_echoed_in_the_report() {
    let run = |seed: &str| mlv(&["verify", "--suite", "landen", "--cases", "3", "--seed", seed]);
    let (a, b) = (run("1"), run("2"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_ne!(json(&a)["seed"], json(&b)["seed"]);
}
