//! The Petrov-type by Ricci-pattern table of semi-symmetry properties.
//!
//! A cell states what holds identically for the generic member of the row's
//! family written in the column's standard frame. Rows with a free Λ may be
//! specialized: when the only obstruction is a single condition linear in Λ,
//! either it repeats the constraint of an earlier row (`see above`) or its
//! real root is substituted and the cell re-evaluated.

use std::fmt;

use serde::Serialize;

use super::{standard_family, PetrovType};
use crate::conditions::{predicates, Verdict};
use crate::curvature::{names, CurvatureSet, SegrePattern};
use crate::error::Result;
use crate::scalar::{Bindings, Polynomial};

pub const COLUMNS: [PetrovType; 6] =
    [PetrovType::I, PetrovType::II, PetrovType::III, PetrovType::D, PetrovType::N, PetrovType::O];

const CORNER: &str = "Segre type \\ Petrov type";

#[derive(Clone, Copy, Debug)]
enum LambdaChoice {
    /// Free and assumed nonzero.
    Term,
    Zero,
    /// Free with no assumption.
    Free,
    /// `Λ = −½Ψ₂`, imposed as `Ψ₂ = −2Λ`.
    HalfPsi2,
    /// `Λ = Φ₁₁'`.
    Phi11,
}

struct Case {
    name: &'static str,
    pattern: SegrePattern,
    lambda: LambdaChoice,
}

struct RowPlan {
    label: &'static str,
    cases: Vec<Case>,
    specialize: bool,
}

fn rows() -> Vec<RowPlan> {
    let one = |pattern, lambda| vec![Case { name: "", pattern, lambda }];
    vec![
        RowPlan {
            label: "Λ-term A1[(111,1)] or vacuum",
            cases: vec![
                Case { name: "Λ-term", pattern: SegrePattern::LambdaTerm, lambda: LambdaChoice::Term },
                Case { name: "vacuum", pattern: SegrePattern::Vacuum, lambda: LambdaChoice::Zero },
            ],
            specialize: false,
        },
        RowPlan {
            label: "Λ-term, Λ=-½Ψ₂",
            cases: one(SegrePattern::LambdaTerm, LambdaChoice::HalfPsi2),
            specialize: false,
        },
        RowPlan {
            label: "A1[(11)(1,1)], Λ=-½Ψ₂",
            cases: one(SegrePattern::NonNullEm, LambdaChoice::HalfPsi2),
            specialize: false,
        },
        RowPlan { label: "A1[(11)(1,1)]", cases: one(SegrePattern::NonNullEm, LambdaChoice::Free), specialize: true },
        RowPlan {
            label: "A3[(11,2)], Λ=0",
            cases: one(SegrePattern::PureRadiation, LambdaChoice::Zero),
            specialize: false,
        },
        RowPlan {
            label: "A1[(111),1] perfect fluid, Λ=½Φ₀₀'=Φ₁₁'=½Φ₂₂'",
            cases: one(SegrePattern::PerfectFluid, LambdaChoice::Phi11),
            specialize: false,
        },
        RowPlan {
            label: "A1[1(11,1)] tachyon fluid, Λ=-½Φ₀₀'=Φ₁₁'=-½Φ₂₂'",
            cases: one(SegrePattern::Tachyon, LambdaChoice::Phi11),
            specialize: false,
        },
        RowPlan { label: "All other Ricci tensors", cases: one(SegrePattern::Other, LambdaChoice::Free), specialize: true },
    ]
}

/// The relation `2Λ + Ψ₂ = 0` in monic form.
fn half_psi2_constraint() -> Polynomial {
    let lam = Polynomial::var(names::lambda());
    (&lam.scale(&2.into()) + &Polynomial::var(names::psi(2))).monic()
}

/// Family for a case in a column, or `None` when the row's relation
/// references a component that vanishes identically in that frame.
fn build_case(case: &Case, t: PetrovType) -> Result<Option<(CurvatureSet, Vec<Polynomial>)>> {
    let lam = Polynomial::var(names::lambda());
    let (lambda, extra) = match case.lambda {
        LambdaChoice::Term => (lam.clone(), vec![lam.clone()]),
        LambdaChoice::Zero => (Polynomial::zero(), vec![]),
        LambdaChoice::Free | LambdaChoice::HalfPsi2 => (lam.clone(), vec![]),
        LambdaChoice::Phi11 => (Polynomial::var(names::phi(1, 1)), vec![]),
    };
    let (c, mut nonzero) = standard_family(t, case.pattern, lambda);
    nonzero.extend(extra);
    if let LambdaChoice::HalfPsi2 = case.lambda {
        if c.weyl.psi[2].is_zero() {
            return Ok(None);
        }
        let mut b = Bindings::new();
        b.bind_with_conjugate(names::psi(2), lam.scale(&(-2).into()));
        let c = c.substitute(&b)?;
        let nonzero = nonzero.iter().map(|p| p.substitute(&b)).collect::<Result<Vec<_>>>()?;
        return Ok(Some((c, nonzero)));
    }
    Ok(Some((c, nonzero)))
}

/// Outcome of one case in one cell.
#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub case: String,
    pub conformal: String,
    pub ricci: String,
    pub conformal_witness: Option<String>,
    pub ricci_witness: Option<String>,
    #[serde(skip)]
    conformal_verdict: Verdict,
    #[serde(skip)]
    ricci_verdict: Verdict,
}

impl CaseResult {
    fn new(case: &str, conformal: Verdict, ricci: Verdict) -> Self {
        CaseResult {
            case: case.to_string(),
            conformal: conformal.summary(),
            ricci: ricci.summary(),
            conformal_witness: conformal.witness().map(|w| w.to_string()),
            ricci_witness: ricci.witness().map(|w| w.to_string()),
            conformal_verdict: conformal,
            ricci_verdict: ricci,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCell {
    pub row: String,
    pub column: String,
    pub label: String,
    pub cases: Vec<CaseResult>,
    /// Set when the label comes from a specialization of Λ.
    pub specialized: Option<String>,
    /// The families the label was decided on.
    #[serde(skip)]
    pub families: Vec<CurvatureSet>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub label: String,
    pub cells: Vec<TableCell>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableDocument {
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

fn label_for(conformal: bool, ricci: bool) -> &'static str {
    match (conformal, ricci) {
        (true, true) => "semi-sym",
        (true, false) => "conf s-s",
        (false, true) => "Ric s-s",
        (false, false) => "-",
    }
}

fn cases_label(results: &[CaseResult]) -> &'static str {
    let conf = results.iter().all(|r| r.conformal_verdict.holds());
    let ric = results.iter().all(|r| r.ricci_verdict.holds());
    label_for(conf, ric)
}

fn evaluate(name: &str, c: &CurvatureSet, nonzero: &[Polynomial]) -> Result<CaseResult> {
    let p = predicates(c, nonzero)?;
    Ok(CaseResult::new(name, p.conformal, p.ricci))
}

/// The single obstruction when it is linear in Λ with a constant leading
/// coefficient.
fn linear_obstruction(results: &[CaseResult]) -> Option<Polynomial> {
    let mut gens: Vec<Polynomial> = Vec::new();
    for r in results {
        for v in [&r.conformal_verdict, &r.ricci_verdict] {
            match v {
                Verdict::Holds => {}
                Verdict::Fails { .. } => return None,
                Verdict::HoldsIff { generators, .. } => {
                    for g in generators {
                        if !gens.contains(g) {
                            gens.push(g.clone());
                        }
                    }
                }
            }
        }
    }
    match gens.as_slice() {
        [g] if g.degree_in(names::lambda()) == 1 => Some(g.clone()),
        _ => None,
    }
}

/// A cell re-read under the only value of Λ its obstruction allows.
struct Specialization {
    label: String,
    cases: Vec<CaseResult>,
    note: String,
    family: Option<CurvatureSet>,
}

fn specialize(
    case: &Case,
    c: &CurvatureSet,
    nonzero: &[Polynomial],
    results: &[CaseResult],
    earlier: &[Polynomial],
) -> Result<Option<Specialization>> {
    let Some(g) = linear_obstruction(results) else { return Ok(None) };
    if earlier.contains(&g.monic()) {
        return Ok(Some(Specialization {
            label: "see above".into(),
            cases: results.to_vec(),
            note: format!("{g} = 0 is an earlier row"),
            family: None,
        }));
    }
    let lam = names::lambda();
    let (a, b) = g.split_linear(lam).expect("linear in lambda");
    let Some(inv) = a.as_constant().and_then(|a| a.inv()) else { return Ok(None) };
    let root = (-b).scale(&inv);
    if !root.is_self_conjugate() {
        return Ok(None);
    }
    let mut bind = Bindings::new();
    bind.bind(lam, root.clone());
    let c2 = c.substitute(&bind)?;
    let nz: Vec<Polynomial> = nonzero.iter().map(|p| p.substitute(&bind)).collect::<Result<_>>()?;
    let r = evaluate(case.name, &c2, &nz)?;
    let label = cases_label(std::slice::from_ref(&r));
    Ok(Some(Specialization { label: label.to_string(), cases: vec![r], note: format!("Lambda = {root}"), family: Some(c2) }))
}

/// Evaluates every cell of the table.
pub fn reproduce_table() -> Result<TableDocument> {
    let mut rows_out = Vec::new();
    let mut earlier: Vec<Polynomial> = Vec::new();
    for plan in rows() {
        let mut cells = Vec::new();
        for t in COLUMNS {
            let column = column_label(t).to_string();
            let mut built = Vec::new();
            for case in &plan.cases {
                built.push(build_case(case, t)?);
            }
            if built.iter().any(Option::is_none) {
                cells.push(TableCell { row: plan.label.into(), column, label: "∄".into(), cases: vec![], specialized: None, families: vec![] });
                continue;
            }
            let built: Vec<_> = built.into_iter().flatten().collect();
            let mut results = Vec::new();
            for (case, (c, nz)) in plan.cases.iter().zip(&built) {
                results.push(evaluate(case.name, c, nz)?);
            }
            let mut label = cases_label(&results).to_string();
            let mut specialized = None;
            let mut families: Vec<CurvatureSet> = built.iter().map(|(c, _)| c.clone()).collect();
            if plan.specialize && label != "semi-sym" {
                let (c, nz) = &built[0];
                if let Some(sp) = specialize(&plan.cases[0], c, nz, &results, &earlier)? {
                    label = sp.label;
                    results = sp.cases;
                    specialized = Some(sp.note);
                    if let Some(f) = sp.family {
                        families = vec![f];
                    }
                }
            }
            cells.push(TableCell { row: plan.label.into(), column, label, cases: results, specialized, families });
        }
        if plan.cases.iter().any(|c| matches!(c.lambda, LambdaChoice::HalfPsi2)) {
            let k = half_psi2_constraint();
            if !earlier.contains(&k) {
                earlier.push(k);
            }
        }
        rows_out.push(TableRow { label: plan.label.into(), cells });
    }
    Ok(TableDocument { columns: COLUMNS.iter().map(|t| column_label(*t).to_string()).collect(), rows: rows_out })
}

/// Column headers; type O is printed as `0`.
fn column_label(t: PetrovType) -> &'static str {
    match t {
        PetrovType::O => "0",
        PetrovType::I => "I",
        PetrovType::II => "II",
        PetrovType::III => "III",
        PetrovType::D => "D",
        PetrovType::N => "N",
    }
}

impl TableDocument {
    pub fn labels(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.cells.iter().map(|c| c.label.clone()).collect()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}

/// Plain-text grid: columns separated by ` | `, padded to the widest entry.
impl fmt::Display for TableDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = |s: &str| s.chars().count();
        let mut widths = vec![width(CORNER)];
        widths.extend(self.columns.iter().map(|c| width(c)));
        for row in &self.rows {
            widths[0] = widths[0].max(width(&row.label));
            for (k, cell) in row.cells.iter().enumerate() {
                widths[k + 1] = widths[k + 1].max(width(&cell.label));
            }
        }
        let line = |f: &mut fmt::Formatter<'_>, items: Vec<&str>| -> fmt::Result {
            let padded: Vec<String> =
                items.iter().zip(&widths).map(|(s, &w)| format!("{s}{}", " ".repeat(w - width(s)))).collect();
            writeln!(f, "{}", padded.join(" | ").trim_end())
        };
        let mut header = vec![CORNER];
        header.extend(self.columns.iter().map(String::as_str));
        line(f, header)?;
        let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
        writeln!(f, "{}", rule.join("-+-"))?;
        for row in &self.rows {
            let mut items = vec![row.label.as_str()];
            items.extend(row.cells.iter().map(|c| c.label.as_str()));
            line(f, items)?;
        }
        Ok(())
    }
}
