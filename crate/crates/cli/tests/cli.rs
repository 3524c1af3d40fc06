use std::process::{Command, Output};

use jsonschema::JSONSchema;
use serde_json::Value;

fn casimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = casimir(args);
    let text = String::from_utf8(out.stdout).unwrap();
    let value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    (value, out.status.code().unwrap())
}

fn schema() -> JSONSchema {
    let text = include_str!("../schema/output.schema.json");
    let schema: Value = serde_json::from_str(text).unwrap();
    JSONSchema::compile(&schema).expect("schema compiles")
}

fn assert_valid(v: &Value) {
    let s = schema();
    let msgs: Vec<String> = match s.validate(v) {
        Ok(()) => return,
        Err(errors) => errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect(),
    };
    panic!("schema violations: {msgs:?}\n{v:#}");
}

#[test]
fn orbit_dimension_rank_seven() {
    let (v, code) = json(&["orbit", "--rank", "7", "--weight", "1,0,1,0,0,1,0"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dimension"], "1680");
    assert_eq!(
        v["request"]["weight"]["mu"],
        serde_json::json!([3, 2, 2, 1, 1, 1, 0, 0])
    );
    assert_valid(&v);
}

#[test]
fn orbit_list() {
    let (v, code) = json(&["orbit", "--rank", "2", "--weight", "1,0", "--list"]);
    assert_eq!(code, 0);
    let elems = v["result"]["elements"].as_array().unwrap();
    assert_eq!(elems.len(), 3);
    assert_valid(&v);
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["orbit", "--rank", "2", "--weight", "-1,0"][..],
        &["orbit", "--rank", "2", "--weight", "1,0,0"],
        &["orbit", "--rank", "0", "--weight", ""],
        &["orbit", "--rank", "2", "--weight", "a,b"],
        &["chs", "--rank", "2", "--weight", "1,0"],
        &["eigen", "--rank", "3", "--weight", "1,0,0", "--class", "x"],
        &["--jobs", "0", "orbit", "--rank", "2", "--weight", "1,0"],
    ] {
        let out = casimir(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn chs_example() {
    let (v, code) = json(&["chs", "--rank", "2", "--weight", "0,1", "--order", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        v["result"]["terms"],
        serde_json::json!({"mu(2)": "2", "mu(1,1)": "2"})
    );
    assert_valid(&v);
}

#[test]
fn chs_both_methods_match() {
    let (v, code) = json(&[
        "chs", "--rank", "3", "--weight", "2,0,1", "--order", "4", "--method", "both", "--rep",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["match"], true);
    assert_eq!(v["result"]["formula"], v["result"]["bruteforce"]);
    assert_eq!(v["result"]["source"], "representation");
    assert_valid(&v);
}

#[test]
fn cof_example() {
    let (v, code) = json(&["cof", "--rank", "3", "--weight", "1,0,0", "--order", "4"]);
    assert_eq!(code, 0);
    let terms = &v["result"]["terms"];
    assert_eq!(terms["mu(4)"], "1");
    assert_eq!(terms["mu(2)^2"], "0");
    assert_valid(&v);
}

#[test]
fn decompose_dimensions_agree() {
    let (v, code) = json(&["decompose", "--rank", "2", "--weight", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dimension"], "8");
    assert_eq!(v["result"]["weyl_dimension"], "8");
    let mults: Vec<&str> = v["result"]["orbits"]
        .as_array()
        .unwrap()
        .iter()
        .map(|o| o["multiplicity"].as_str().unwrap())
        .collect();
    assert_eq!(mults, ["1", "2"]);
    assert_valid(&v);
}

#[test]
fn eigen_closed_and_cof_agree() {
    let (v, code) = json(&[
        "eigen",
        "--rank",
        "5",
        "--weight",
        "1,0,0,0,0",
        "--class",
        "4",
        "--norm",
        "default",
        "--method",
        "both",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["match"], true);
    assert_eq!(v["result"]["closed"], v["result"]["from_cof"]);
    assert_valid(&v);

    let (v, code) = json(&[
        "eigen",
        "--rank",
        "6",
        "--weight",
        "1,0,1,0,0,0",
        "--class",
        "4,3",
        "--method",
        "both",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["match"], true);
    assert_eq!(v["result"]["errata_applied"].as_array().unwrap().len(), 1);
    assert_valid(&v);
}

#[test]
fn eigen_printed_table_disagrees_for_43() {
    let (v, code) = json(&[
        "eigen",
        "--rank",
        "6",
        "--weight",
        "1,0,1,0,0,0",
        "--class",
        "4,3",
        "--method",
        "both",
        "--table",
        "printed",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "failed");
    assert_eq!(v["result"]["match"], false);
}

#[test]
fn domain_errors_exit_three() {
    let out = casimir(&["eigen", "--rank", "2", "--weight", "1,0", "--class", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("N - 2"));

    let out = casimir(&[
        "eigen",
        "--rank",
        "9",
        "--weight",
        "1,0,0,0,0,0,0,0,0",
        "--class",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_schur_and_orbits() {
    let (v, code) = json(&["verify", "--suite", "schur", "--order-max", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["passed"], 7);
    assert_valid(&v);

    let (v, code) = json(&["verify", "--suite", "orbits", "--rank-max", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["failed"], 0);
    assert_valid(&v);
}

#[test]
fn verify_eigen_reports_candidates() {
    let (v, code) = json(&[
        "verify",
        "--suite",
        "eigen",
        "--order-max",
        "7",
        "--rank-max",
        "6",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["failed"], 0);
    let candidates = v["result"]["erratum_candidates"].as_array().unwrap();
    assert!(!candidates.is_empty());
    assert!(candidates
        .iter()
        .all(|c| c["explained"] == true && c["label"].as_str().unwrap().starts_with("k_43(")));
    assert_valid(&v);

    let (v, code) = json(&[
        "verify",
        "--suite",
        "eigen",
        "--order-max",
        "7",
        "--rank-max",
        "6",
        "--strict",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "failed");

    let (v, code) = json(&[
        "verify",
        "--suite",
        "eigen",
        "--order-max",
        "7",
        "--rank-max",
        "6",
        "--table",
        "printed",
    ]);
    assert_eq!(code, 1);
    assert!(v["result"]["failed"].as_u64().unwrap() > 0);
}

#[test]
fn verify_eigen_below_order_seven_is_clean() {
    let (v, code) = json(&[
        "verify",
        "--suite",
        "eigen",
        "--order-max",
        "6",
        "--rank-max",
        "7",
        "--strict",
    ]);
    assert_eq!(code, 0, "{v:#}");
    assert!(v["result"]["erratum_candidates"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn output_independent_of_jobs() {
    let cases: [&[&str]; 3] = [
        &[
            "verify",
            "--suite",
            "all",
            "--rank-max",
            "4",
            "--order-max",
            "5",
            "--seed",
            "7",
        ],
        &["decompose", "--rank", "3", "--weight", "2,1,1"],
        &[
            "cof", "--rank", "4", "--weight", "1,1,0,1", "--order", "5", "--rep", "--method",
            "both",
        ],
    ];
    for args in cases {
        let one = casimir(&[&["--jobs", "1"], args].concat());
        let four = casimir(&[&["--jobs", "4"], args].concat());
        assert!(one.status.success(), "{args:?}");
        assert_eq!(one.stdout, four.stdout, "{args:?}");
    }
}

#[test]
fn same_seed_is_reproducible() {
    let args = [
        "verify",
        "--suite",
        "reductions",
        "--order-max",
        "5",
        "--seed",
        "3",
    ];
    assert_eq!(casimir(&args).stdout, casimir(&args).stdout);
}

#[test]
fn csv_and_table_formats() {
    let out = casimir(&[
        "--format", "csv", "chs", "--rank", "2", "--weight", "0,1", "--order", "2",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<(String, String)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[0].to_string(), r[1].to_string())
        })
        .collect();
    assert!(rows.contains(&("result.terms.mu(2)".into(), "2".into())));
    assert!(rows.contains(&("result.terms.mu(1,1)".into(), "2".into())));

    let out = casimir(&[
        "--format",
        "table",
        "orbit",
        "--rank",
        "7",
        "--weight",
        "1,0,1,0,0,1,0",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("result.dimension") && l.ends_with(" 1680")));
}

#[test]
fn json_round_trips() {
    let out = casimir(&[
        "eigen", "--rank", "4", "--weight", "0,1,0,1", "--class", "3,2", "--method", "both",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
    assert_valid(&v);
}

#[test]
fn timing_only_on_request() {
    let (v, _) = json(&["orbit", "--rank", "2", "--weight", "1,0"]);
    assert!(v.get("timing_ms").is_none());
    let (v, _) = json(&["--timing", "orbit", "--rank", "2", "--weight", "1,0"]);
    assert!(v["timing_ms"].is_u64());
    assert_valid(&v);
}
