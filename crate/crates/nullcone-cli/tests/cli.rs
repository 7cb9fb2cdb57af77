//! End-to-end tests through the compiled binary: document handling,
//! exit codes, report fields, catalog commands.

use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nullcone"))
}

fn write_doc(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

fn run_json(args: &[&str]) -> (Value, Output) {
    let out = bin().arg("--json").args(args).output().unwrap();
    let v: Value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json from {args:?}: {e}\n{:?}", out));
    (v, out)
}

const S4_1: &str = r#"{"format_version":1,"dim":4,"signature":{"p":2,"k":0},
 "brackets":[{"a":4,"b":1,"c":2,"coeff":"1"},{"a":3,"b":1,"c":3,"coeff":"1"},{"a":3,"b":1,"c":4,"coeff":"1"}]}"#;

const CASE31A: &str = r#"{"format_version":1,"dim":4,"signature":{"p":2,"k":0},
 "brackets":[{"a":1,"b":1,"c":3,"coeff":"2"},{"a":4,"b":3,"c":4,"coeff":"2"},{"a":3,"b":1,"c":4,"coeff":"1"}]}"#;

const SL2: &str = r#"{"format_version":1,"dim":3,"signature":{"p":1,"k":1},
 "brackets":[{"a":1,"b":1,"c":2,"coeff":"2"},{"a":3,"b":2,"c":3,"coeff":"2"},{"a":2,"b":1,"c":3,"coeff":"1"}]}"#;

const S3_3_EUCLIDEAN: &str = r#"{"format_version":1,"dim":3,"signature":{"p":1,"k":1},
 "brackets":[{"a":3,"b":1,"c":2,"coeff":"1"},{"a":2,"b":1,"c":3,"coeff":"-1"}]}"#;

const N5_6: &str = r#"{"format_version":1,"dim":5,"signature":{"p":2,"k":1},
 "brackets":[{"a":2,"b":1,"c":4,"coeff":"1"},{"a":5,"b":1,"c":3,"coeff":"1"},
             {"a":4,"b":1,"c":5,"coeff":"1"},{"a":2,"b":3,"c":5,"coeff":"1"}]}"#;

// an isometric scramble of a certified member whose support defeats the
// pair-relabelling search: invariants vanish, no frame certificate
const UNDETERMINED: &str = r#"{"format_version":1,"dim":4,"signature":{"p":2,"k":0},
 "brackets":[
  {"a":1,"b":1,"c":2,"coeff":"1"},{"a":1,"b":1,"c":3,"coeff":"4"},{"a":1,"b":1,"c":4,"coeff":"-1"},
  {"a":1,"b":2,"c":3,"coeff":"-1"},{"a":1,"b":3,"c":4,"coeff":"-1"},{"a":2,"b":1,"c":2,"coeff":"-2"},
  {"a":2,"b":1,"c":4,"coeff":"2"},{"a":2,"b":2,"c":3,"coeff":"4"},{"a":2,"b":3,"c":4,"coeff":"4"},
  {"a":3,"b":1,"c":2,"coeff":"-1"},{"a":3,"b":1,"c":3,"coeff":"-2"},{"a":3,"b":1,"c":4,"coeff":"1"},
  {"a":3,"b":2,"c":3,"coeff":"1"},{"a":3,"b":3,"c":4,"coeff":"1"},{"a":4,"b":1,"c":2,"coeff":"-4"},
  {"a":4,"b":1,"c":4,"coeff":"4"},{"a":4,"b":2,"c":3,"coeff":"8"},{"a":4,"b":3,"c":4,"coeff":"8"}]}"#;

#[test]
fn check_reports_solvable_structure() {
    let f = write_doc(S4_1);
    let (v, out) = run_json(&["check", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(v["jacobi_ok"], true);
    assert_eq!(v["solvable"], true);
    assert_eq!(v["dim"], 4);
}

#[test]
fn check_rejects_non_canonical_document_with_exit_2() {
    let f = write_doc(
        r#"{"format_version":1,"dim":3,"signature":{"p":1,"k":1},
            "brackets":[{"a":2,"b":3,"c":1,"coeff":"1"}]}"#,
    );
    let out = bin().args(["check", f.path().to_str().unwrap()]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("brackets[0]"), "{stderr}");
}

#[test]
fn check_abelian_document() {
    let f = write_doc(r#"{"format_version":1,"dim":3,"signature":{"p":1,"k":1},"brackets":[]}"#);
    let (v, out) = run_json(&["check", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(v["classification"], "abelian");
}

#[test]
fn check_jacobi_failure_exits_3() {
    // C^3_14 nonzero with C^1_13 != C^4_34 violates the Jacobi identity
    let f = write_doc(
        r#"{"format_version":1,"dim":4,"signature":{"p":2,"k":0},
            "brackets":[{"a":1,"b":1,"c":3,"coeff":"1"},{"a":4,"b":3,"c":4,"coeff":"3"},
                        {"a":3,"b":1,"c":4,"coeff":"1"}]}"#,
    );
    let (v, out) = run_json(&["check", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(v["jacobi_ok"], false);
}

#[test]
fn curvature_of_s5_35_at_a_1() {
    // Ric = θ1θ1 + 5 θ3θ3 for the one-parameter example at a = 1
    let f = write_doc(
        r#"{"format_version":1,"dim":5,"signature":{"p":2,"k":1},
            "brackets":[{"a":4,"b":1,"c":4,"coeff":"-3"},{"a":2,"b":1,"c":2,"coeff":"-2"},
                        {"a":5,"b":1,"c":5,"coeff":"-1"},{"a":3,"b":1,"c":3,"coeff":"-1"},
                        {"a":4,"b":2,"c":3,"coeff":"1"},{"a":2,"b":3,"c":5,"coeff":"-1"}]}"#,
    );
    let (v, out) = run_json(&["curvature", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let ric = v["ric"].as_array().unwrap();
    assert_eq!(ric.len(), 2);
    assert_eq!(ric[0], serde_json::json!({"a":1,"b":1,"component":"1"}));
    assert_eq!(ric[1], serde_json::json!({"a":3,"b":3,"component":"5"}));
}

#[test]
fn curvature_flags_for_n5_6() {
    let f = write_doc(N5_6);
    let (v, out) = run_json(&["curvature", f.path().to_str().unwrap(), "--max-nabla", "2"]);
    assert!(out.status.success());
    assert_eq!(v["ric"].as_array().unwrap().len(), 0);
    assert_eq!(v["riem_zero"], false);
    assert_eq!(v["nabla_riem_zero"][0], true);
    // machine rationals re-parse exactly
    for inv in v["invariants"].as_array().unwrap() {
        let s = inv["value"].as_str().unwrap();
        nullcone::scalar::parse(s).unwrap();
    }
}

#[test]
fn certify_member_not_member_and_undetermined() {
    let f = write_doc(CASE31A);
    let (v, out) = run_json(&["certify", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(v["verdict"], "member (certified)");
    assert_eq!(
        v["certificate"]["weights"],
        serde_json::json!(["3", "1"])
    );
    assert_eq!(v["distribution_chain"]["d_perp_nilpotent"], true);

    let f = write_doc(S3_3_EUCLIDEAN);
    let (v, out) = run_json(&["certify", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(v["verdict"], "not in null cone (certified)");
    assert!(v["certificate"].is_null());

    let f = write_doc(UNDETERMINED);
    let (v, out) = run_json(&["certify", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
    assert_eq!(v["verdict"], "undetermined");
    assert_eq!(v["necessary"]["invariants_all_zero"], true);
    // lenient batch mode downgrades the exit code only
    let out = bin()
        .args(["--lenient", "certify", f.path().to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn construct_nilpotent_and_rejections() {
    let f = write_doc(N5_6);
    let (v, out) = run_json(&["construct", f.path().to_str().unwrap(), "--mode", "nilpotent"]);
    assert!(out.status.success());
    assert_eq!(v["signature"], serde_json::json!({"p": 2, "k": 1}));
    assert_eq!(v["refinement_ok"], true);
    // the emitted document re-parses
    let doc_text = serde_json::to_string(&v["document"]).unwrap();
    let parsed: Value = serde_json::from_str(&doc_text).unwrap();
    assert_eq!(parsed["dim"], 5);

    let f = write_doc(SL2);
    let out = bin()
        .args(["construct", f.path().to_str().unwrap(), "--mode", "csolvable"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not solvable"));

    let f = write_doc(S3_3_EUCLIDEAN);
    let out = bin()
        .args(["construct", f.path().to_str().unwrap(), "--mode", "csolvable"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("rational"));
}

#[test]
fn construct_csolvable_s4_1() {
    let f = write_doc(S4_1);
    let (v, out) = run_json(&["construct", f.path().to_str().unwrap(), "--mode", "csolvable"]);
    assert!(out.status.success());
    assert_eq!(v["signature"], serde_json::json!({"p": 2, "k": 0}));
    assert_eq!(v["refinement_ok"], true);
}

#[test]
fn catalog_list_show_verify() {
    let (v, out) = run_json(&["catalog", "list"]);
    assert!(out.status.success());
    let names: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap())
        .collect();
    for required in ["lorentz-typeIII-dim4", "s4_8-coframe", "sl3R-o55", "sl3R-o66"] {
        assert!(names.contains(&required));
    }

    let (v, out) = run_json(&["catalog", "show", "case21a-sl2-n31", "--param", "a=1", "--param", "b=1"]);
    assert!(out.status.success());
    let brackets = v["document"]["brackets"].as_array().unwrap();
    assert!(brackets.iter().any(|b| b["a"] == 3 && b["b"] == 1 && b["c"] == 5 && b["coeff"] == "1"));

    let out = bin().args(["catalog", "verify", "--all"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));

    let (v, out) = run_json(&["catalog", "verify", "sl3R-o55"]);
    assert!(out.status.success());
    assert_eq!(v["mismatch_count"], 0);

    // verifying at a non-Jacobi binding reports the defect as a mismatch
    let out = bin()
        .args(["catalog", "verify", "case21a-sl2-n31", "--param", "a=2", "--param", "b=3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));

    let out = bin().args(["catalog", "show", "no-such-entry"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_export_matches_shipped_data_file() {
    let out = bin().args(["catalog", "export"]).output().unwrap();
    assert!(out.status.success());
    let generated: Value = serde_json::from_slice(&out.stdout).unwrap();
    let shipped: Value = serde_json::from_str(include_str!("../data/catalog.json")).unwrap();
    assert_eq!(generated, shipped);
}

#[test]
fn appendix_a_default_and_filtered() {
    let (v, out) = run_json(&["appendix-a"]);
    assert!(out.status.success());
    let groups = v["groups"].as_array().unwrap();
    // the full table has 11 weight groups at (2, 2+2)
    assert_eq!(groups.len(), 11);

    let (v, out) = run_json(&["appendix-a", "--case", "1,0"]);
    assert!(out.status.success());
    let groups = v["groups"].as_array().unwrap();
    // every weight in the sublist satisfies b1 <= -1
    for g in groups {
        let w = g["weight"].as_array().unwrap();
        assert!(w[0].as_i64().unwrap() <= -1);
    }
}
