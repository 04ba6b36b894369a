//! Black-box tests of the `cechml` binary: schema errors map to exit 2,
//! module failures to exit 3, I/O failures to exit 4, reports match the
//! published shapes, and reruns are byte-identical.

use std::process::{Command, Output};

fn cechml(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cechml"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn p1_degree_three_at_infinity() {
    let out = cechml(&["p1", "--divisor", r#"{"inf": 3}"#]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["h0"], 4);
    assert_eq!(v["h1"], 0);
    assert_eq!(v["rr"], true);
    assert_eq!(v["schema_version"], 1);
}

#[test]
fn malformed_json_exits_2_with_no_partial_output() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let out = cechml(&[
        "p1",
        "--divisor",
        "{broken",
        "--out",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!target.exists(), "no partial output may be written");
    assert!(out.stdout.is_empty());
}

#[test]
fn math_failures_exit_3() {
    // pole outside the unit disc: surfaced from the plane module
    let out = cechml(&[
        "plane-ml",
        "--domain",
        r#"{"kind": "disc", "center": 0.0, "radius": 1.0}"#,
        "--poles",
        r#"[{"a": 5.0, "coeffs": {"1": 1.0}}]"#,
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn missing_input_file_exits_4() {
    let out = cechml(&["p1", "--divisor", "@/no/such/file.json"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn unsupported_schema_version_exits_2() {
    let out = cechml(&["p1", "--divisor", r#"{"schema_version": 99, "inf": 1}"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cech_two_arc_circle_fixture() {
    let input = r#"{
        "schema_version": 1,
        "n_opens": 2,
        "faces": [
            {"face": [0], "dim": 1},
            {"face": [1], "dim": 1},
            {"face": [0, 1], "dim": 2}
        ],
        "restrictions": [
            {"face": [0], "coface": [0, 1], "matrix": [["1"], ["1"]]},
            {"face": [1], "coface": [0, 1], "matrix": [["1"], ["1"]]}
        ]
    }"#;
    let out = cechml(&["cech", "--input", input]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["ranks"], serde_json::json!([1, 1]));
}

#[test]
fn tables_p2() {
    let out = cechml(&["tables", "--n", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["betti"], serde_json::json!([1, 0, 1, 0, 1]));
    assert_eq!(
        v["hodge"],
        serde_json::json!([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    );
}

#[test]
fn ml_p1_solution_is_verified_exactly() {
    let out = cechml(&[
        "ml-p1",
        "--parts",
        r#"[{"pole": "1", "coeffs": {"1": "1"}}, {"pole": "1i", "coeffs": {"3": "2"}}]"#,
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["class_is_zero"], true);
    assert_eq!(v["verified"], true);
    assert_eq!(v["ranks"][1], 0);
}

#[test]
fn rr_sweep_rows_all_hold() {
    let out = cechml(&["rr-sweep", "--samples", "20", "--seed", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "divisor,degree,h0,h1,lhs,rhs,holds");
    let mut rows = 0;
    for line in lines {
        assert!(line.ends_with(",true"), "Riemann-Roch failed in {line}");
        rows += 1;
    }
    assert_eq!(rows, 20);
}

#[test]
fn plane_grid_csv_has_fixed_columns() {
    let out = cechml(&[
        "plane-ml",
        "--domain",
        r#"{"kind": "plane"}"#,
        "--poles",
        r#"[{"a": 0.0, "coeffs": {"1": 1.0}}]"#,
        "--grid",
        "-0.5:0.5:3,-0.5:0.5:3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("z_re,z_im,f_re,f_im,bound\n"));
    // 1/z on a 3×3 grid: the pole at the center is excluded
    assert_eq!(text.lines().count(), 1 + 8);
}

#[test]
fn torus_residue_criterion_decides_solvability() {
    let balanced = r#"[
        {"a": {"re": 0.25, "im": 0.25}, "coeffs": {"1": 1.0}},
        {"a": {"re": 0.6, "im": 0.7}, "coeffs": {"1": -1.0}}
    ]"#;
    let out = cechml(&["torus-ml", "--lattice", "1,i", "--parts", balanced, "--check"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["solvable"], true);
    assert!(v["max_periodicity_dev"].as_f64().unwrap() <= 1e-6);

    let defective = r#"[{"a": {"re": 0.25, "im": 0.25}, "coeffs": {"1": 1.0}}]"#;
    let out = cechml(&["torus-ml", "--lattice", "1,i", "--parts", defective, "--check"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["solvable"], false);
    assert!(v["max_periodicity_dev"].as_f64().unwrap() > 1e-3);
}

#[test]
fn explain_lists_every_numerical_default() {
    let out = cechml(&["--explain"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    for key in [
        "periodicity_samples",
        "q_samples",
        "rho",
        "stages",
        "tolerance",
        "window",
    ] {
        assert!(v.get(key).is_some(), "missing default {key}");
    }
}

#[test]
fn config_file_overrides_defaults_and_rejects_typos() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("config.json");
    std::fs::write(&config, r#"{"q_samples": 128, "rho": 0.01}"#).unwrap();
    let out = cechml(&["--config", config.to_str().unwrap(), "--explain"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["q_samples"], 128);
    assert_eq!(v["rho"], 0.01);

    std::fs::write(&config, r#"{"qsamples": 128}"#).unwrap();
    let out = cechml(&["--config", config.to_str().unwrap(), "--explain"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_file_matches_stdout_bytes(){
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("report.json");
    let args = ["p1", "--divisor", r#"{"0": 2, "inf": -1}"#];
    let direct = cechml(&args);
    assert!(direct.status.success());
    let mut with_out: Vec<&str> = args.to_vec();
    let target_str = target.to_str().unwrap().to_string();
    with_out.extend(["--out", &target_str]);
    assert!(cechml(&with_out).status.success());
    assert_eq!(std::fs::read(&target).unwrap(), direct.stdout);
}
