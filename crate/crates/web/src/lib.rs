//! wasm-bindgen front end. Each export wraps a CLI command and hands back
//! its text output, or the error text when the command exits nonzero.

use spinorss::cli::{cmd_classify_text, cmd_kernel, cmd_table, CommandOutput, EXIT_OK};
use wasm_bindgen::prelude::*;

/// Sample inputs offered by the page, as `(label, json)` pairs.
pub const SAMPLES: [(&str, &str); 5] = [
    ("Type D, matched Λ", include_str!("../../core/inputs/type_d_lambda_matched.json")),
    ("Type D, free Λ", include_str!("../../core/inputs/type_d_lambda_free.json")),
    ("Type N, pure radiation", include_str!("../../core/inputs/type_n_pure_radiation.json")),
    ("Type I vacuum", include_str!("../../core/inputs/type_i_vacuum.json")),
    ("Conformally flat, generic Φ", include_str!("../../core/inputs/conformally_flat_generic.json")),
];

fn settle(out: CommandOutput) -> Result<String, String> {
    if out.code == EXIT_OK {
        Ok(out.stdout)
    } else {
        Err(out.stdout)
    }
}

pub fn classify_text(input: &str, machine: bool) -> Result<String, String> {
    settle(cmd_classify_text(input, machine))
}

pub fn kernel_text(petrov: &str, which: &str) -> Result<String, String> {
    settle(cmd_kernel(petrov, which, false))
}

pub fn table_text() -> Result<String, String> {
    settle(cmd_table(None, false))
}

#[wasm_bindgen]
pub fn classify(input: &str, machine: bool) -> Result<String, JsValue> {
    classify_text(input, machine).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn kernel(petrov: &str, which: &str) -> Result<String, JsValue> {
    kernel_text(petrov, which).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn table() -> Result<String, JsValue> {
    table_text().map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sample_count() -> usize {
    SAMPLES.len()
}

#[wasm_bindgen]
pub fn sample_label(i: usize) -> String {
    SAMPLES.get(i).map_or_else(String::new, |s| s.0.to_string())
}

#[wasm_bindgen]
pub fn sample_input(i: usize) -> String {
    SAMPLES.get(i).map_or_else(String::new, |s| s.1.to_string())
}
