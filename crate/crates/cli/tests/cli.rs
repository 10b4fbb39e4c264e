use std::fs;
use std::process::{Command, Output};

use serde_json::Value;
use xyz_spectra::{is_isomorphic, GeneratorSpec, Graph};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xyz-spectra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn subdivided_triangle_is_hexagon() {
    let out = run(&["transform", "--gen", "cycle:3", "--code", "00+"]);
    assert_eq!(code(&out), 0);
    let g = Graph::parse_edge_list(&stdout(&out)).unwrap();
    let c6 = "cycle:6"
        .parse::<GeneratorSpec>()
        .unwrap()
        .generate()
        .unwrap();
    assert!(is_isomorphic(&g, &c6).unwrap());
}

#[test]
fn total_graph_counts() {
    let out = run(&["transform", "--gen", "cycle:4", "--code", "+++"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("8 16\n"));
}

#[test]
fn transform_json_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = run(&[
        "transform",
        "--gen",
        "petersen",
        "--code",
        "0-+",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["n"], 25);
    assert_eq!(v["graph"]["labels"].as_array().unwrap().len(), 25);
}

#[test]
fn non_regular_input_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("path.el");
    fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let out = run(&["transform", "--in", path.to_str().unwrap(), "--code", "+0+"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn parse_and_io_errors() {
    assert_eq!(
        code(&run(&["transform", "--gen", "cycle:4", "--code", "0x+"])),
        3
    );
    assert_eq!(
        code(&run(&["transform", "--gen", "wheel:5", "--code", "000"])),
        3
    );
    assert_eq!(
        code(&run(&[
            "transform",
            "--in",
            "/nonexistent/g.el",
            "--code",
            "000"
        ])),
        3
    );
    assert_eq!(
        code(&run(&["spectrum", "--gen", "cycle:4", "--format", "xml"])),
        3
    );
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.el");
    fs::write(&path, "3 1\n0 zero\n").unwrap();
    assert_eq!(code(&run(&["spectrum", "--in", path.to_str().unwrap()])), 3);
}

#[test]
fn checked_spectrum_of_total_square() {
    let out = run(&[
        "spectrum", "--gen", "cycle:4", "--code", "+++", "--check", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(v["max_abs_dev"].as_f64().unwrap() < 1e-9);
    let predicted: Vec<f64> = v["predicted"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_f64().unwrap())
        .collect();
    let s = 2f64.sqrt();
    let expected = [6.0, 6.0, 4.0 + s, 4.0 + s, 4.0, 4.0 - s, 4.0 - s, 0.0];
    for (p, e) in predicted.iter().zip(expected) {
        assert!((p - e).abs() < 1e-9, "{predicted:?}");
    }
}

#[test]
fn pretty_spectrum_rounds_to_twelve_digits() {
    let out = run(&["spectrum", "--gen", "complete:4", "--code", "111"]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("predicted: 10 ×9, 0\n"),
        "{}",
        stdout(&out)
    );
    let out = run(&["spectrum", "--gen", "cycle:4", "--code", "+++"]);
    assert!(stdout(&out).contains("5.41421356237 ×2"));
}

#[test]
fn failed_check_exits_one() {
    let out = run(&[
        "spectrum", "--gen", "cycle:5", "--code", "--+", "--check", "--tol", "0",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL"));
}

#[test]
fn tree_counts() {
    assert_eq!(
        stdout(&run(&["trees", "--gen", "cycle:3", "--code", "00+"])),
        "C3 00+: 6 / 6 MATCH\n"
    );
    assert_eq!(
        stdout(&run(&["trees", "--gen", "cycle:4", "--code", "++0"])),
        "C4 ++0: 0 / 0 MATCH\n"
    );
    let out = run(&[
        "trees", "--gen", "cycle:4", "--code", "+++", "--format", "json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["formula"], "3528");
    assert_eq!(v["matrix_tree"], "3528");
    assert_eq!(v["match"], true);
}

#[test]
fn table_rows() {
    let out = run(&["table", "--gen", "cycle:4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("64/64 rows verified\n"));

    let out = run(&["table", "--gen", "petersen", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 64);
    assert!(rows.iter().all(|r| r["passed"] == true));

    let out = run(&[
        "table",
        "--gen",
        "cycle:5",
        "--codes",
        "+++,--+,-++,+-+",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().nth(1).unwrap().starts_with("+++,"));
}

#[test]
fn verify_one_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("detail.jsonl");
    let out = run(&[
        "verify",
        "--graphs",
        "cycle:4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("64/64 code-graph cells pass"));
    let detail = fs::read_to_string(&path).unwrap();
    let cells = detail
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap())
        .filter(|v| v["kind"] == "cell")
        .count();
    assert_eq!(cells, 64);
}

#[test]
fn verify_fails_at_zero_tolerance() {
    assert_eq!(
        code(&run(&["verify", "--graphs", "cycle:5", "--tol", "0"])),
        1
    );
}

#[test]
fn verify_series_on_petersen() {
    let out = run(&["verify", "--series", "c,l,+++", "--gen", "petersen"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn degenerate_series_is_a_domain_error() {
    assert_eq!(
        code(&run(&["verify", "--series", "l", "--gen", "matching:6"])),
        2
    );
    assert_eq!(
        code(&run(&["verify", "--series", "c,q", "--gen", "petersen"])),
        3
    );
}

#[test]
fn output_is_reproducible() {
    let args = [
        "table",
        "--gen",
        "complete_bipartite:3:3",
        "--format",
        "json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn catalog_lists_all_codes() {
    let out = run(&["catalog"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 64);
}
