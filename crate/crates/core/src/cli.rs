//! Input documents, report rendering and the command implementations behind
//! the `spinorss` binary. Commands return their output and exit code so they
//! can be driven from tests and from the browser demo.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{classify_case, reproduce_table, standard_kernel, ClassificationReport, KernelReport, KernelSystem, PetrovType};
use crate::conditions::{verify_identities, Verdict};
use crate::curvature::{CurvatureSet, RicciSpinor, WeylSpinor};
use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Polynomial, Symbol, SymbolKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolDecl {
    pub name: String,
    pub kind: SymbolKind,
}

/// Curvature data as written in an input file. Lower-triangle Φ entries may
/// be `null`, in which case they are filled in by conjugation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub lambda: String,
    pub psi: [String; 5],
    pub phi: [[Option<String>; 3]; 3],
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub symbols: Vec<SymbolDecl>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub assume_nonzero: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub petrov_hint: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ParsedInput {
    pub curvature: CurvatureSet,
    pub assumptions: Vec<Polynomial>,
    pub petrov_hint: Option<PetrovType>,
}

fn resolver(decls: &[SymbolDecl]) -> Result<HashMap<String, Polynomial>> {
    let mut table = HashMap::new();
    for d in decls {
        let s = Symbol::intern(&d.name, d.kind)?;
        table.insert(d.name.clone(), Polynomial::var(s));
        if d.kind == SymbolKind::Complex {
            table.insert(s.conj().name(), Polynomial::var(s.conj()));
        }
    }
    Ok(table)
}

/// Builds a curvature set from a JSON input document.
pub fn parse_input(text: &str) -> Result<ParsedInput> {
    let doc: InputDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    input_to_curvature(&doc)
}

pub fn input_to_curvature(doc: &InputDocument) -> Result<ParsedInput> {
    let table = resolver(&doc.symbols)?;
    let parse = |s: &str| parse_scalar(s, |name| table.get(name).cloned());
    let lambda = parse(&doc.lambda)?;
    if !lambda.is_self_conjugate() {
        return Err(Error::ConjugationMismatch(format!("lambda = {lambda} is not real")));
    }
    let psi: Vec<Polynomial> = doc.psi.iter().map(|s| parse(s)).collect::<Result<_>>()?;
    let mut phi: [[Polynomial; 3]; 3] = Default::default();
    for a in 0..3 {
        for b in a..3 {
            phi[a][b] = match &doc.phi[a][b] {
                Some(s) => parse(s)?,
                None => return Err(Error::Parse(format!("phi[{a}][{b}] is required"))),
            };
        }
    }
    for a in 0..3 {
        for b in 0..a {
            phi[a][b] = match &doc.phi[a][b] {
                Some(s) => parse(s)?,
                None => phi[b][a].conj(),
            };
        }
    }
    let ricci = RicciSpinor::new(phi)?;
    let weyl = WeylSpinor::new(psi.try_into().expect("five entries"));
    let assumptions = doc
        .assume_nonzero
        .iter()
        .map(|n| table.get(n).cloned().ok_or_else(|| Error::Parse(format!("undeclared symbol `{n}` in assume_nonzero"))))
        .collect::<Result<_>>()?;
    let petrov_hint = doc.petrov_hint.as_deref().map(str::parse).transpose()?;
    Ok(ParsedInput { curvature: CurvatureSet::new(weyl, ricci, lambda)?, assumptions, petrov_hint })
}

/// Writes a curvature set back as an input document.
pub fn format_input(c: &CurvatureSet, assumptions: &[Polynomial], hint: Option<PetrovType>) -> InputDocument {
    let mut syms: Vec<Symbol> = c.symbols().into_iter().chain(assumptions.iter().flat_map(|p| p.symbols())).map(|s| s.base()).collect();
    syms.sort_by_key(|s| s.name());
    syms.dedup();
    InputDocument {
        lambda: c.lambda().to_string(),
        psi: std::array::from_fn(|n| c.weyl.psi[n].to_string()),
        phi: std::array::from_fn(|a| std::array::from_fn(|b| Some(c.ricci.get(a, b).to_string()))),
        symbols: syms.iter().map(|s| SymbolDecl { name: s.name(), kind: s.kind() }).collect(),
        assume_nonzero: assumptions.iter().map(|p| p.to_string()).collect(),
        petrov_hint: hint.map(|t| t.to_string()),
    }
}

fn verdict_json(v: &Verdict) -> Value {
    match v {
        Verdict::Holds => json!({ "status": "holds" }),
        Verdict::HoldsIff { generators, witness } => json!({
            "status": "holds_iff",
            "generators": generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "witness": witness,
        }),
        Verdict::Fails { witness } => json!({ "status": "fails", "witness": witness }),
    }
}

/// Machine-readable report; carries the input so it can be re-evaluated.
pub fn report_json(report: &ClassificationReport, input: &InputDocument) -> Value {
    json!({
        "input": input,
        "petrov": report.petrov.to_string(),
        "segre": report.segre.label(),
        "conformally_semisymmetric": verdict_json(&report.conformal),
        "ricci_semisymmetric": verdict_json(&report.ricci),
        "semisymmetric": verdict_json(&report.semisymmetric),
        "residuals": report.residuals.iter().map(|r| json!({
            "condition": r.condition.to_string(),
            "generators": r.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn kernel_json(petrov: PetrovType, r: &KernelReport) -> Value {
    json!({
        "petrov": petrov.to_string(),
        "system": r.which.to_string(),
        "dimension": r.dimension,
        "basis": r.basis,
        "symbolic_rank": r.symbolic_rank,
        "sampled_ranks": r.sampled_ranks,
        "conditions_on_kernel": r.conditions_on_kernel.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
    })
}

/// Output text and process exit code of a command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub code: i32,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { stdout, code: EXIT_OK }
    }

    fn input_error(e: &Error) -> Self {
        CommandOutput { stdout: format!("error: {e}\n"), code: EXIT_INPUT }
    }
}

pub fn cmd_classify_text(text: &str, machine: bool) -> CommandOutput {
    let run = || -> Result<(ClassificationReport, InputDocument)> {
        let doc: InputDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let parsed = input_to_curvature(&doc)?;
        Ok((classify_case(&parsed.curvature, &parsed.assumptions, parsed.petrov_hint)?, doc))
    };
    match run() {
        Ok((report, doc)) if machine => {
            CommandOutput::ok(serde_json::to_string_pretty(&report_json(&report, &doc)).expect("json") + "\n")
        }
        Ok((report, _)) => CommandOutput::ok(report.to_string()),
        Err(e) => CommandOutput::input_error(&e),
    }
}

pub fn cmd_verify_identities() -> CommandOutput {
    let checks = verify_identities();
    let mut out = String::new();
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{status}] {}", c.name));
        if let Some(d) = &c.detail {
            out.push_str(&format!(" ({d})"));
        }
        out.push('\n');
        if let Some(f) = &c.first_failure {
            out.push_str(&format!("       first failing component: {f}\n"));
        }
    }
    let passed = checks.iter().filter(|c| c.passed).count();
    out.push_str(&format!("{passed}/{} identities hold\n", checks.len()));
    CommandOutput { stdout: out, code: if passed == checks.len() { EXIT_OK } else { EXIT_MISMATCH } }
}

/// Renders the table; with `golden`, compares the rendering byte for byte.
pub fn cmd_table(golden: Option<&str>, machine: bool) -> CommandOutput {
    let doc = match reproduce_table() {
        Ok(d) => d,
        Err(e) => return CommandOutput::input_error(&e),
    };
    let rendered = if machine { doc.to_json() } else { doc.to_string() };
    match golden {
        None => CommandOutput::ok(rendered),
        Some(expected) if expected == rendered => CommandOutput::ok(rendered),
        Some(expected) => {
            let mut out = rendered.clone();
            let diff = expected
                .lines()
                .zip(rendered.lines())
                .position(|(a, b)| a != b)
                .unwrap_or_else(|| expected.lines().count().min(rendered.lines().count()));
            out.push_str(&format!("golden mismatch at line {}\n", diff + 1));
            CommandOutput { stdout: out, code: EXIT_MISMATCH }
        }
    }
}

pub fn cmd_kernel(petrov: &str, which: &str, machine: bool) -> CommandOutput {
    let run = || -> Result<(PetrovType, KernelReport)> {
        let t: PetrovType = petrov.parse()?;
        let w: KernelSystem = which.parse()?;
        Ok((t, standard_kernel(t, w)?))
    };
    match run() {
        Ok((t, r)) if machine => CommandOutput::ok(serde_json::to_string_pretty(&kernel_json(t, &r)).expect("json") + "\n"),
        Ok((t, r)) => CommandOutput::ok(format!("Petrov type: {t}\n{r}")),
        Err(e @ Error::InconsistentInstantiationRank { .. }) => {
            CommandOutput { stdout: format!("error: {e}\n"), code: EXIT_MISMATCH }
        }
        Err(e) => CommandOutput::input_error(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TYPE_D: &str = r#"{
        "lambda": "lam",
        "psi": ["0", "0", "psi2", "0", "0"],
        "phi": [["0", "0", "0"], [null, "p11", "0"], [null, null, "0"]],
        "symbols": [{"name": "lam", "kind": "real"}, {"name": "p11", "kind": "real"}, {"name": "psi2", "kind": "complex"}],
        "assume_nonzero": ["psi2", "p11"]
    }"#;

    #[test]
    fn parses_symbolic_type_d() {
        let p = parse_input(TYPE_D).unwrap();
        assert_eq!(p.curvature.weyl.psi[2].to_string(), "psi2");
        assert_eq!(p.assumptions.len(), 2);
        let r = classify_case(&p.curvature, &p.assumptions, None).unwrap();
        assert_eq!(r.petrov, PetrovType::D);
    }

    #[test]
    fn hermiticity_violation_is_reported() {
        let text = r#"{"lambda": "0", "psi": ["0","0","0","0","0"],
            "phi": [["0","1+i","0"],["1-2*i","0","0"],["0","0","0"]]}"#;
        assert!(matches!(parse_input(text), Err(Error::Hermiticity(_))));
        assert_eq!(cmd_classify_text(text, false).code, EXIT_INPUT);
    }

    #[test]
    fn complex_lambda_rejected() {
        let text = r#"{"lambda": "i", "psi": ["0","0","0","0","0"],
            "phi": [["0","0","0"],[null,"0","0"],[null,null,"0"]]}"#;
        assert!(matches!(parse_input(text), Err(Error::ConjugationMismatch(_))));
    }

    #[test]
    fn undeclared_symbol_is_input_error() {
        let text = r#"{"lambda": "x", "psi": ["0","0","0","0","0"],
            "phi": [["0","0","0"],[null,"0","0"],[null,null,"0"]]}"#;
        assert_eq!(cmd_classify_text(text, false).code, EXIT_INPUT);
        assert_eq!(cmd_classify_text("{", false).code, EXIT_INPUT);
    }

    #[test]
    fn format_round_trip() {
        let p = parse_input(TYPE_D).unwrap();
        let doc = format_input(&p.curvature, &p.assumptions, None);
        let again = input_to_curvature(&doc).unwrap();
        assert_eq!(again.curvature, p.curvature);
        assert_eq!(again.assumptions, p.assumptions);
    }

    #[test]
    fn bad_kernel_arguments() {
        assert_eq!(cmd_kernel("IV", "S1", false).code, EXIT_INPUT);
        assert_eq!(cmd_kernel("D", "nope", false).code, EXIT_INPUT);
    }
}
