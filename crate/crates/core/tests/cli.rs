use std::path::PathBuf;
use std::process::Command;

use spinorss::cli::{cmd_classify_text, parse_input};
use spinorss::classify::classify_case;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spinorss"))
}

fn input(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("inputs").join(name)
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn classify_matched_type_d_is_semisymmetric() {
    let (code, out, _) = run(&["classify", input("type_d_lambda_matched.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("Petrov type:      D"));
    assert!(out.contains("conformally s-s   holds identically"));
    assert!(out.contains("Ricci s-s         holds identically"));
    assert!(out.contains("semi-symmetric    holds identically"));
}

#[test]
fn classify_machine_output_reevaluates_identically() {
    let path = input("type_d_lambda_free.json");
    let (code, out, _) = run(&["classify", "--machine", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["conformally_semisymmetric"]["generators"][0], "lam + 1/2*psi2");
    let again = cmd_classify_text(&v["input"].to_string(), true);
    assert_eq!(again.code, 0);
    assert_eq!(again.stdout, out);
}

#[test]
fn hermiticity_error_exits_two() {
    let (code, _, err) = run(&["classify", input("not_hermitian.json").to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("not Hermitian"));
}

#[test]
fn missing_file_exits_two() {
    let (code, _, _) = run(&["classify", "/nonexistent/input.json"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_identities_reports_five_passes() {
    let (code, out, _) = run(&["verify-identities"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("[PASS]").count(), 5);
    assert!(out.contains("factor 3/4"));
    assert!(out.contains("5/5 identities hold"));
}

#[test]
fn table_against_golden() {
    let (code, out, _) = run(&["table", "--golden", golden("semisymmetry_table.txt").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("Segre type \\ Petrov type"));
    let (code, _, _) = run(&["table", "--machine", "--golden", golden("semisymmetry_table.json").to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn table_golden_mismatch_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    let text = std::fs::read_to_string(golden("semisymmetry_table.txt")).unwrap().replacen("semi-sym", "Ric s-s ", 1);
    std::fs::write(&path, text).unwrap();
    let (code, out, _) = run(&["table", "--golden", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("golden mismatch at line 3"));
}

#[test]
fn kernel_command() {
    let (code, out, _) = run(&["kernel", "--petrov", "N", "--which", "S1"]);
    assert_eq!(code, 0);
    assert!(out.contains("dimension:  1"));
    assert!(out.contains("basis:      Phi22'"));
    assert!(out.contains("condition:  lambda*phi22 = 0"));
    let (code, out, _) = run(&["kernel", "--petrov", "D", "--machine"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["basis"][0], "Phi11'");
    let (code, _, _) = run(&["kernel", "--petrov", "X"]);
    assert_eq!(code, 2);
}

#[test]
fn example_inputs_classify_as_documented() {
    let cases = [
        ("type_n_pure_radiation.json", "N", "A3[(11,2)]", true, true),
        ("type_i_vacuum.json", "I", "vacuum", false, true),
        ("conformally_flat_generic.json", "O", "other", true, false),
        ("perfect_fluid.json", "O", "A1[(111),1]", true, true),
    ];
    for (file, petrov, segre, conf, ric) in cases {
        let p = parse_input(&std::fs::read_to_string(input(file)).unwrap()).unwrap();
        let r = classify_case(&p.curvature, &p.assumptions, p.petrov_hint).unwrap();
        assert_eq!(r.petrov.to_string(), petrov, "{file}");
        assert_eq!(r.segre.label(), segre, "{file}");
        assert_eq!((r.conformal.holds(), r.ricci.holds()), (conf, ric), "{file}");
    }
}
