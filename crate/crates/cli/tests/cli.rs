use serde_json::Value;

use forestsym::QPoly;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("forestsym").chain(args.iter().copied());
    let code = forestsym_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn coeff_of(terms: &Value, partition: &[u64]) -> Value {
    terms
        .as_array()
        .unwrap()
        .iter()
        .find(|t| t["partition"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).eq(partition.iter().copied()))
        .map(|t| t["coeff"].clone())
        .unwrap_or(Value::Null)
}

#[test]
fn forest_expansion_coefficients() {
    let v = json(&["compute", "X", "--m", "2,4,4,4", "--y", "rho"]);
    assert_eq!(coeff_of(&v["coefficients"], &[4]), serde_json::json!(["1", "1"]));
    assert_eq!(coeff_of(&v["coefficients"], &[2, 1, 1]), serde_json::json!(["3", "1"]));
    assert_eq!(v["expansion"]["basis"], "rho");
    let v = json(&["compute", "X", "--m", "2,4,4,4", "--y", "qe"]);
    assert_eq!(v["expansion"]["basis"], "e");
}

#[test]
fn rho_three() {
    let v = json(&["compute", "rho", "--n", "3", "--basis", "h"]);
    assert_eq!(coeff_of(&v["terms"], &[3]), serde_json::json!(["1", "1", "1"]));
    assert_eq!(coeff_of(&v["terms"], &[2, 1]), serde_json::json!(["-2", "-1"]));
    assert_eq!(coeff_of(&v["terms"], &[1, 1, 1]), serde_json::json!(["1"]));
}

#[test]
fn table_and_json_agree() {
    let v = json(&["compute", "X", "--m", "3,4,4,5,5"]);
    let (code, table, _) = run(&["compute", "X", "--m", "3,4,4,5,5", "--format", "table"]);
    assert_eq!(code, 0);
    let rows: Vec<(String, String)> = table
        .lines()
        .map(|l| {
            let (a, b) = l.split_once("  ").unwrap();
            (a.trim().to_string(), b.trim().to_string())
        })
        .collect();
    let from_json: Vec<(String, String)> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let parts: Vec<String> = t["partition"].as_array().unwrap().iter().map(|p| p.to_string()).collect();
            let strs: Vec<&str> = t["coeff"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
            (format!("({})", parts.join(",")), QPoly::from_json_strings(&strs).unwrap().to_string())
        })
        .collect();
    assert_eq!(rows, from_json);
}

#[test]
fn decorated_expansion_reports_positivity() {
    let v = json(&["compute", "X", "--m", "3,4,4,4", "--decoration", "1,2", "--y", "qe"]);
    assert_eq!(v["input"]["S"], serde_json::json!([1, 2]));
    assert!(v["positivity"]["coefficients_outside_Nq"].as_array().unwrap().contains(&serde_json::json!([3, 1])));
    let (code, _, err) = run(&["compute", "X", "--m", "2,2,3", "--decoration", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("decoration"));
}

#[test]
fn oracles_and_small_objects() {
    let v = json(&["compute", "csf", "--m", "2,3,3"]);
    assert_eq!(v["basis"], "m");
    let path = json(&["compute", "llt", "--m", "2,3,3"]);
    assert_eq!(path["degree"], 3);
    let fig = json(&["compute", "csf", "--graph", "edges:1-2,1-3,1-4,2-3"]);
    assert_eq!(fig["degree"], 4);
    let s = json(&["compute", "stirling", "--n", "3"]);
    assert_eq!(s["values"][1]["value"], serde_json::json!(["1", "1"]));
    let o = json(&["compute", "orientation-sum", "--m", "2,2"]);
    assert_eq!(o["basis"], "e");
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["compute", "X", "--m", "3,2,3"][..],
        &["compute", "X", "--m", "1,2", "--y", "schur"],
        &["compute", "llt", "--graph", "edges:1-2,2-3"],
        &["compute", "csf", "--graph", "edges:1-3,2-3"],
        &["compute", "csf", "--m", "2,2", "--graph", "edges:1-2"],
        &["verify", "thm9"],
        &["verify", "thm1", "--target", "csf"],
        &["verify", "modular", "--target", "schur"],
        &["verify", "thm1", "--max-n", "x"],
        &["compute", "rho", "--n", "0"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 2, "{args:?}: {out}");
        assert!(!err.is_empty());
    }
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "thm1", "--max-n", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS"));
    let (code, out, _) = run(&["verify", "thm1", "--max-n", "4", "--seed", "5", "--format", "json"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
    assert!(v["failures"].as_array().unwrap().len() <= 3);
    assert!(v["fault"].is_object());
    let (code, _, _) = run(&["verify", "modular", "--max-n", "4", "--target", "llt"]);
    assert_eq!(code, 0);
}

#[test]
fn output_is_independent_of_jobs() {
    let one = run(&["verify", "vertical", "--max-n", "4", "--format", "json", "--jobs", "1"]);
    let four = run(&["verify", "vertical", "--max-n", "4", "--format", "json", "--jobs", "4"]);
    assert_eq!(one, four);
    let a = run(&["compute", "X", "--m", "2,3,4,4"]);
    let b = run(&["compute", "X", "--m", "2,3,4,4"]);
    assert_eq!(a, b);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}
