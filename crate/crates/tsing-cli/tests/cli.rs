//! End-to-end tests of the binary: golden outputs for the table values,
//! deterministic stdout, exit codes, schema-valid JSON, and file output.

use std::path::Path;
use std::process::{Command, Output};

fn tsing(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tsing"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = tsing(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn json_of(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout_of(&full)).expect("valid json")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../schemas")
        .join(name);
    let raw = std::fs::read_to_string(&path).expect("schema file");
    let doc: serde_json::Value = serde_json::from_str(&raw).expect("schema parses");
    jsonschema::validator_for(&doc).expect("schema compiles")
}

#[test]
fn expand_matches_the_table_strings() {
    assert_eq!(stdout_of(&["hj", "expand", "25", "14"]), "[2,5,3]\n");
    assert_eq!(stdout_of(&["hj", "expand", "18", "5"]), "[4,3,2]\n");
    assert_eq!(stdout_of(&["hj", "expand", "4", "1"]), "[4]\n");
}

#[test]
fn classify_reports_the_parameters() {
    assert_eq!(
        stdout_of(&["hj", "classify", "5", "2"]),
        "T-singularity d=1 n=3 a=1\n"
    );
    assert_eq!(
        stdout_of(&["hj", "classify", "2", "2"]),
        "rational double point\n"
    );
    assert_eq!(stdout_of(&["hj", "classify", "3"]), "not a T-string\n");
}

#[test]
fn domain_errors_exit_2_with_one_line() {
    let out = tsing(&["hj", "expand", "4", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("Q out of range"), "stderr: {stderr}");
    assert_eq!(stderr.lines().count(), 1);

    let out = tsing(&["verify", "9,2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = tsing(&["fn", "moduli", "--case", "r9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn argument_errors_exit_2() {
    let out = tsing(&["hj", "expand", "four", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tsing(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_is_unrestricted_by_level() {
    let lvl2 = stdout_of(&["tstring", "generate", "--level", "2", "--dmax", "1"]);
    assert!(lvl2.contains("[2,5,3]"));
    // pure enumeration keeps working past the census cap
    let lvl3 = stdout_of(&["tstring", "generate", "--level", "3", "--dmax", "1"]);
    assert_eq!(lvl3.lines().count(), 8);
    let lvl0 = stdout_of(&["tstring", "generate", "--level", "0", "--dmax", "2"]);
    assert_eq!(lvl0, "[3,3]\n[4]\n");
}

#[test]
fn discrepancy_reports_index_and_k2() {
    let text = stdout_of(&["discrepancy", "4", "3", "2"]);
    assert!(text.contains("(2/3, 2/3, 1/3)"));
    assert!(text.contains("cartier index: 3"));
    assert!(text.contains("K²_X: 1"));
    // non-T chains still get discrepancies and an index
    let text = stdout_of(&["discrepancy", "3"]);
    assert!(text.contains("(1/3)"));
    assert!(!text.contains("K²_X"));
}

#[test]
fn hilbert_coefficient_and_equality() {
    assert_eq!(
        stdout_of(&[
            "hilbert",
            "--weights",
            "1,1,2,3,5",
            "--relations",
            "3,10",
            "--coeff",
            "5"
        ]),
        "13\n"
    );
    assert_eq!(
        stdout_of(&[
            "hilbert",
            "--weights",
            "1,1,2,5",
            "--relations",
            "10",
            "--equal-weights",
            "1,1,2,3,5",
            "--equal-relations",
            "3,10",
        ]),
        "true\n"
    );
    assert_eq!(
        stdout_of(&[
            "hilbert",
            "--weights",
            "1,1,2,5",
            "--relations",
            "10",
            "--check-plurigenera",
            "3,1,20"
        ]),
        "true\n"
    );
}

#[test]
fn splittings_list_the_three_cases() {
    let text = stdout_of(&["fn", "splittings", "--n", "2", "--class", "4,2"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].contains("m = 4, d = 9"));
    assert!(lines[1].contains("m = 10, d = 21"));
    assert!(lines[2].contains("m = 12, d = 25"));
}

#[test]
fn identical_argv_gives_byte_identical_stdout() {
    for args in [
        vec!["census", "--format", "json"],
        vec!["census", "--format", "md"],
        vec!["verify", "all", "--format", "json"],
        vec!["tstring", "generate", "--level", "2", "--dmax", "3"],
    ] {
        let a = tsing(&args);
        let b = tsing(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "nondeterministic output for {args:?}");
    }
}

#[test]
fn json_envelopes_validate_against_the_schema() {
    let envelope_schema = schema("envelope.schema.json");
    for args in [
        vec!["hj", "expand", "25", "14"],
        vec!["hj", "eval", "3", "3"],
        vec!["hj", "classify", "5", "2"],
        vec!["tstring", "generate", "--level", "1", "--dmax", "2"],
        vec!["discrepancy", "3", "5", "2"],
        vec!["plurigenus", "4", "3", "2", "-m", "5"],
        vec!["rr", "--chi", "3", "--l2", "16", "--kl", "2"],
        vec!["hilbert", "--weights", "1,1,2,5", "--relations", "10"],
        vec![
            "fn",
            "intersection",
            "--n",
            "2",
            "--class",
            "4,2",
            "--with",
            "0,1",
        ],
        vec!["fn", "h0", "--n", "6", "--class", "3,0"],
        vec!["fn", "splittings", "--n", "2", "--class", "4,2"],
        vec!["fn", "cover", "--n", "2", "--branch", "4,2"],
        vec!["fn", "moduli", "--case", "generic-1"],
        vec!["census"],
        vec!["verify", "18,5"],
    ] {
        let doc = json_of(&args);
        assert!(
            envelope_schema.is_valid(&doc),
            "envelope schema rejects output of {args:?}: {:?}",
            envelope_schema.iter_errors(&doc).collect::<Vec<_>>()
        );
    }
}

#[test]
fn census_result_validates_against_its_schema() {
    let census_schema = schema("census.schema.json");
    let doc = json_of(&["census"]);
    let result = &doc["result"];
    assert!(
        census_schema.is_valid(result),
        "census schema rejects result: {:?}",
        census_schema.iter_errors(result).collect::<Vec<_>>()
    );
    assert_eq!(doc["result"]["theorem_table"].as_array().unwrap().len(), 3);
}

#[test]
fn census_rows_carry_the_classification_data() {
    let doc = json_of(&["census"]);
    let rows = doc["result"]["theorem_table"].as_array().unwrap();
    assert_eq!(rows[0]["cartier_index"], 2);
    assert_eq!(rows[0]["family"], "1/4d(1,2d-1), d <= 32");
    assert_eq!(rows[1]["type"]["label"], "1/18(1,5)");
    assert_eq!(rows[1]["moduli"], 27);
    assert_eq!(rows[2]["type"]["label"], "1/25(1,14)");
    assert_eq!(rows[2]["moduli"], 28);
    assert_eq!(rows[2]["component"], "new-component");
    let smooth = rows[2]["smoothability"].as_array().unwrap();
    assert_eq!(smooth[0]["verdict"], "no");
    assert_eq!(smooth[1]["verdict"], "conjectural");
}

#[test]
fn markdown_census_mirrors_the_table_columns() {
    let md = stdout_of(&["census", "--format", "md"]);
    assert!(md.contains("| Cartier index | T-singularity | Construction |"));
    assert!(md.contains("| 2 | 1/4d(1,2d-1), d <= 32 | Example n=2 |"));
    assert!(md.contains("| 3 | 1/18(1,5) | Example (b) |"));
    assert!(md.contains("| 5 | 1/25(1,14) | Example (c) |"));
}

#[test]
fn verify_all_passes() {
    let doc = json_of(&["verify", "all"]);
    assert_eq!(doc["result"]["all_passed"], true);
    assert_eq!(doc["result"]["reports"].as_array().unwrap().len(), 3);
}

#[test]
fn out_writes_files() {
    let dir = tempfile::tempdir().unwrap();

    // --out FILE writes the rendered output there, nothing on stdout
    let file = dir.path().join("expand.json");
    let out = tsing(&[
        "hj",
        "expand",
        "25",
        "14",
        "--format",
        "json",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&file).unwrap()).unwrap();
    assert_eq!(doc["result"]["display"], "[2,5,3]");

    // census --out DIR drops census.json (plus the requested format)
    let out = tsing(&[
        "census",
        "--format",
        "md",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(dir.path().join("census.json").exists());
    assert!(dir.path().join("census.md").exists());

    // other commands refuse a directory
    let out = tsing(&[
        "hj",
        "expand",
        "4",
        "1",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}
