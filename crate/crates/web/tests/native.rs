use spinorss_web::{classify_text, kernel_text, table_text, SAMPLES};

#[test]
fn every_sample_classifies() {
    for (label, json) in SAMPLES {
        let text = classify_text(json, false).unwrap_or_else(|e| panic!("{label}: {e}"));
        assert!(text.contains("Petrov type:"), "{label}");
        let machine: serde_json::Value = serde_json::from_str(&classify_text(json, true).unwrap()).unwrap();
        assert!(machine["semisymmetric"].is_object(), "{label}");
    }
}

#[test]
fn bad_input_is_an_error() {
    let err = classify_text("{\"lambda\": 1}", false).unwrap_err();
    assert!(err.starts_with("error:"));
}

#[test]
fn kernel_of_type_n() {
    let text = kernel_text("N", "S1").unwrap();
    assert!(text.contains("basis:      Phi22'"));
    assert!(kernel_text("Z", "S1").is_err());
    assert!(kernel_text("D", "neither").is_err());
}

#[test]
fn table_matches_golden() {
    assert_eq!(table_text().unwrap(), include_str!("../../core/tests/golden/semisymmetry_table.txt"));
}
