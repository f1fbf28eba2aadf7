//! Semi-symmetry condition spinors and the checks built on them.
//!
//! Conformal semi-symmetry is the vanishing of the mixed spinor
//! `Φ_{A'B'(C}{}^G Ψ_{DEF)G}` and of the contracted Weyl spinor
//! `Ψ^{GH}{}_{(AD} Ψ_{EF)GH} − 2ΛΨ_{ADEF}`. Ricci semi-symmetry is the
//! vanishing of `□_{AB} Φ_{CDC'D'}`, which splits into the totally symmetric
//! part `S1 = Ψ_{(ABC}{}^E Φ_{D)EC'D'}` and the contracted part `S2`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curvature::{box_on, build_x, BoxKind, CurvatureSet};
use crate::error::Result;
use crate::linalg::{self, admissible_point, named_point, seeded_rng};
use crate::scalar::{GaussianRational, Polynomial, Symbol};
use crate::spinor::Spinor;

/// Seed for witness searches; fixed so reports are reproducible.
pub const WITNESS_SEED: u64 = 0x5eed_0001;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConditionName {
    /// `X_{AB(C}{}^G Ψ_{DEF)G}`
    WeylFull,
    /// `Ψ^{GH}{}_{(AD} Ψ_{EF)GH} − 2ΛΨ_{ADEF}`
    WeylContracted,
    /// `Φ_{A'B'(C}{}^G Ψ_{DEF)G}`
    Mixed,
    /// `Ψ_{(ABC}{}^E Φ_{D)EC'D'}`
    RicciS1,
    /// `4ΛΦ_{ACC'D'} − Ψ^{EF}{}_{AC}Φ_{EFC'D'} − 2Φ^E{}_A{}^{F'}{}_{(C'}Φ_{D')F'CE}`
    RicciS2,
    /// `−2X_{AB(C}{}^E Φ_{D)EC'D'} − 2Φ_{AB(C'}{}^{E'} Φ_{D')E'CD}`
    RicciFull,
}

impl ConditionName {
    /// Groups of slots the residual is symmetric in.
    fn blocks(self) -> Vec<Vec<usize>> {
        match self {
            ConditionName::WeylFull => vec![vec![0, 1], vec![2, 3, 4, 5]],
            ConditionName::WeylContracted => vec![vec![0, 1, 2, 3]],
            ConditionName::Mixed => vec![vec![0, 1, 2, 3], vec![4, 5]],
            ConditionName::RicciS1 => vec![vec![0, 1, 2, 3], vec![4, 5]],
            ConditionName::RicciS2 => vec![vec![0, 1], vec![2, 3]],
            ConditionName::RicciFull => vec![vec![0, 1], vec![2, 3], vec![4, 5]],
        }
    }
}

impl fmt::Display for ConditionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConditionName::WeylFull => "weyl-full",
            ConditionName::WeylContracted => "weyl-contracted",
            ConditionName::Mixed => "mixed",
            ConditionName::RicciS1 => "ricci-s1",
            ConditionName::RicciS2 => "ricci-s2",
            ConditionName::RicciFull => "ricci-full",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
pub struct ConditionResidual {
    pub name: ConditionName,
    pub spinor: Spinor,
    /// One component per independent slot pattern of the symmetric blocks.
    pub components: Vec<Polynomial>,
    pub vanishes: bool,
}

impl ConditionResidual {
    fn new(name: ConditionName, spinor: Spinor) -> Self {
        let components = independent_components(&spinor, &name.blocks());
        let vanishes = spinor.is_zero();
        ConditionResidual { name, spinor, components, vanishes }
    }
}

/// Picks one representative index per orbit: inside each block the 1s are
/// packed to the right, so a block of size `k` gives `k + 1` entries.
fn independent_components(s: &Spinor, blocks: &[Vec<usize>]) -> Vec<Polynomial> {
    let mut out = Vec::new();
    let counts: Vec<usize> = blocks.iter().map(|b| b.len() + 1).collect();
    let total: usize = counts.iter().product();
    for mut code in 0..total {
        let mut idx = vec![0usize; s.rank()];
        for (b, block) in blocks.iter().enumerate() {
            let ones = code % counts[b];
            code /= counts[b];
            for (k, &slot) in block.iter().enumerate() {
                idx[slot] = usize::from(k >= block.len() - ones);
            }
        }
        out.push(s.get(&idx).clone());
    }
    out
}

/// `X_{AB(C}{}^G Ψ_{DEF)G}`, slots `[A,B,C,D,E,F]`.
pub fn weyl_full_spinor(c: &CurvatureSet) -> Spinor {
    let x = build_x(c).raise(3).expect("lower slot");
    x.outer(&c.weyl_spinor()).contract(3, 7).expect("valid pair").symmetrize(&[2, 3, 4, 5]).expect("uniform block")
}

pub fn cond_weyl_full(c: &CurvatureSet) -> ConditionResidual {
    ConditionResidual::new(ConditionName::WeylFull, weyl_full_spinor(c))
}

/// `Ψ^{GH}{}_{(AD} Ψ_{EF)GH} − 2ΛΨ_{ADEF}`.
pub fn weyl_contracted_spinor(c: &CurvatureSet) -> Spinor {
    let psi = c.weyl_spinor();
    let up = psi.raise(0).and_then(|s| s.raise(1)).expect("lower slots");
    let quad = up
        .outer(&psi)
        .contract_pairs(&[(0, 6), (1, 7)])
        .expect("valid pairs")
        .symmetrize(&[0, 1, 2, 3])
        .expect("uniform block");
    quad.sub(&psi.scale_poly(&c.lambda().scale(&GaussianRational::from_int(2)))).expect("same signature")
}

pub fn cond_weyl_contracted(c: &CurvatureSet) -> ConditionResidual {
    ConditionResidual::new(ConditionName::WeylContracted, weyl_contracted_spinor(c))
}

/// `Φ_{A'B'(C}{}^G Ψ_{DEF)G}`, slots `[C,D,E,F,A',B']`.
pub fn mixed_spinor(c: &CurvatureSet) -> Spinor {
    mixed_from_parts(&c.weyl_spinor(), &c.ricci_spinor())
}

pub(crate) fn mixed_from_parts(psi: &Spinor, phi: &Spinor) -> Spinor {
    let phi = phi.raise(1).expect("lower slot");
    // [C, G^, A', B', D, E, F, H] → contract G with H → [C, A', B', D, E, F]
    phi.outer(psi)
        .contract(1, 7)
        .and_then(|s| s.permute(&[0, 3, 4, 5, 1, 2]))
        .and_then(|s| s.symmetrize(&[0, 1, 2, 3]))
        .expect("well-formed")
}

pub fn cond_mixed(c: &CurvatureSet) -> ConditionResidual {
    ConditionResidual::new(ConditionName::Mixed, mixed_spinor(c))
}

/// `K_{(ABC}{}^E Φ_{D)EC'D'}` for a four-slot spinor `K` (Ψ or X).
pub(crate) fn s1_with(k: &Spinor, phi: &Spinor) -> Spinor {
    k.raise(3)
        .expect("lower slot")
        .outer(phi)
        .contract(3, 5)
        .and_then(|s| s.symmetrize(&[0, 1, 2, 3]))
        .expect("well-formed")
}

/// `S1 = Ψ_{(ABC}{}^E Φ_{D)EC'D'}`, slots `[A,B,C,D,C',D']`.
pub fn ricci_s1_spinor(c: &CurvatureSet) -> Spinor {
    s1_with(&c.weyl_spinor(), &c.ricci_spinor())
}

/// The same with X in place of Ψ; the Λ terms drop under symmetrization.
pub fn ricci_s1_from_x(c: &CurvatureSet) -> Spinor {
    s1_with(&build_x(c), &c.ricci_spinor())
}

pub fn cond_ricci_s1(c: &CurvatureSet) -> ConditionResidual {
    ConditionResidual::new(ConditionName::RicciS1, ricci_s1_spinor(c))
}

/// `S2 = 4ΛΦ_{ACC'D'} − Ψ^{EF}{}_{AC}Φ_{EFC'D'} − 2Φ^E{}_A{}^{F'}{}_{(C'}Φ_{D')F'CE}`,
/// slots `[A,C,C',D']`.
pub fn ricci_s2_spinor(c: &CurvatureSet) -> Spinor {
    let phi = c.ricci_spinor();
    let lam_term = phi.scale_poly(&c.lambda().scale(&GaussianRational::from_int(4)));
    let psi_up = c.weyl_spinor().raise(0).and_then(|s| s.raise(1)).expect("lower slots");
    let psi_term = psi_up.outer(&phi).contract_pairs(&[(0, 4), (1, 5)]).expect("valid pairs");
    // Φ^E{}_A{}^{F'}{}_{C'} with slots [E^, A, F'^, C'] times Φ_{CE D'F'}
    let phi_up = phi.raise(0).and_then(|s| s.raise(2)).expect("lower slots");
    let quad = phi_up
        .outer(&phi)
        .contract_pairs(&[(0, 5), (2, 7)])
        .and_then(|s| s.permute(&[0, 2, 1, 3]))
        .and_then(|s| s.symmetrize(&[2, 3]))
        .expect("well-formed");
    lam_term
        .sub(&psi_term)
        .and_then(|s| s.sub(&quad.scale(&GaussianRational::from_int(2))))
        .expect("same signature")
}

pub fn cond_ricci_s2(c: &CurvatureSet) -> ConditionResidual {
    ConditionResidual::new(ConditionName::RicciS2, ricci_s2_spinor(c))
}

/// `−2X_{AB(C}{}^E Φ_{D)EC'D'} − 2Φ_{AB(C'}{}^{E'} Φ_{D')E'CD}`, slots `[A,B,C,D,C',D']`.
pub fn ricci_full_spinor(c: &CurvatureSet) -> Spinor {
    let phi = c.ricci_spinor();
    let xphi = build_x(c)
        .raise(3)
        .expect("lower slot")
        .outer(&phi)
        .contract(3, 5)
        .and_then(|s| s.symmetrize(&[2, 3]))
        .expect("well-formed");
    // [A, B, C', E'^] ⊗ [C, D, D', F'] → contract E' with F' → [A, B, C', C, D, D']
    let phiphi = phi
        .raise(3)
        .expect("lower slot")
        .outer(&phi)
        .contract(3, 7)
        .and_then(|s| s.permute(&[0, 1, 3, 4, 2, 5]))
        .and_then(|s| s.symmetrize(&[4, 5]))
        .expect("well-formed");
    xphi.add(&phiphi).expect("same signature").scale(&GaussianRational::from_int(-2))
}

pub fn cond_ricci_full(c: &CurvatureSet) -> ConditionResidual {
    ConditionResidual::new(ConditionName::RicciFull, ricci_full_spinor(c))
}

/// `□^{AB} Φ_{ABC'D'}`: the operator pair raised and contracted with Φ's
/// unprimed pair.
pub fn ricci_full_trace(c: &CurvatureSet) -> Spinor {
    ricci_full_spinor(c)
        .raise(0)
        .and_then(|s| s.raise(1))
        .and_then(|s| s.contract_pairs(&[(0, 2), (1, 3)]))
        .expect("well-formed")
}

/// `□_{(A}{}^F Φ_{C)FC'D'}` read off the full box action.
pub fn ricci_contracted_from_box(c: &CurvatureSet) -> Spinor {
    ricci_full_spinor(c).raise(1).and_then(|s| s.contract(1, 3)).and_then(|s| s.symmetrize(&[0, 1])).expect("well-formed")
}

/// `□_{(AB} Φ_{CD)C'D'}` read off the full box action.
pub fn ricci_symmetric_from_box(c: &CurvatureSet) -> Spinor {
    ricci_full_spinor(c).symmetrize(&[0, 1, 2, 3]).expect("uniform block")
}

/// The contraction over `BC` of the full Weyl condition, slots `[A,D,E,F]`.
pub fn weyl_full_contracted(c: &CurvatureSet) -> Spinor {
    weyl_full_spinor(c).raise(1).and_then(|s| s.contract(1, 2)).expect("well-formed")
}

/// Ratio `r` with `a = r·b`, if one exists.
pub fn proportionality(a: &Spinor, b: &Spinor) -> Option<GaussianRational> {
    if a.slots() != b.slots() {
        return None;
    }
    let (k, bk) = b.components().iter().enumerate().find(|(_, p)| !p.is_zero())?;
    let (m, cb) = bk.leading()?;
    let r = &a.components()[k].coefficient_of(m) / cb;
    (a.sub(&b.scale(&r)).ok()?.is_zero()).then_some(r)
}

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    /// First offending component when the check fails.
    pub first_failure: Option<String>,
    pub detail: Option<String>,
}

fn compare(name: &str, lhs: &Spinor, rhs: &Spinor) -> IdentityCheck {
    let diff = lhs.sub(rhs);
    let (passed, first_failure) = match diff {
        Ok(d) => match d.nonzero().first() {
            None => (true, None),
            Some((idx, p)) => (false, Some(format!("[{idx}] differs by {p}"))),
        },
        Err(e) => (false, Some(e.to_string())),
    };
    IdentityCheck { name: name.to_string(), passed, first_failure, detail: None }
}

/// The proportionality factor between the `BC`-contracted full Weyl
/// condition and the contracted Weyl spinor, computed on generic data.
pub fn weyl_contraction_factor() -> Option<GaussianRational> {
    let c = CurvatureSet::generic();
    proportionality(&weyl_full_contracted(&c), &weyl_contracted_spinor(&c))
}

/// Runs the five identities on the fully symbolic curvature set.
pub fn verify_identities() -> Vec<IdentityCheck> {
    let c = CurvatureSet::generic();
    let mut out = Vec::new();

    let full = ricci_full_spinor(&c);
    let boxed = box_on(&c, &c.ricci_spinor(), BoxKind::Unprimed).expect("lower target");
    out.push(compare("box action on Phi equals the Ricci commutator expression", &boxed, &full));

    let trace = ricci_full_trace(&c);
    out.push(compare("trace Box^AB Phi_ABC'D' vanishes", &trace, &Spinor::zeros(trace.slots().to_vec())));

    let conj_full = full.conj();
    let primed = box_on(&c, &c.ricci_spinor(), BoxKind::Primed).and_then(|s| s.canonical()).expect("lower target");
    out.push(compare("primed box action is the conjugate of the unprimed one", &conj_full, &primed));

    let contracted = weyl_full_contracted(&c);
    let reduced = weyl_contracted_spinor(&c);
    let mut check = match proportionality(&contracted, &reduced) {
        Some(r) if !r.is_zero() => {
            let mut ok = compare("contracted Weyl condition is a multiple of the BC-trace", &contracted, &reduced.scale(&r));
            ok.detail = Some(format!("factor {r}"));
            ok
        }
        _ => IdentityCheck {
            name: "contracted Weyl condition is a multiple of the BC-trace".into(),
            passed: false,
            first_failure: Some("no constant ratio".into()),
            detail: None,
        },
    };
    check.name = "contracted Weyl condition is a multiple of the BC-trace".into();
    out.push(check);

    out.push(compare("S1 built from X equals S1 built from Psi", &ricci_s1_from_x(&c), &ricci_s1_spinor(&c)));
    out
}

/// Ranks of two component sets and their union, plus sampled cross-checks.
#[derive(Clone, Debug, Serialize)]
pub struct RankReport {
    pub first: String,
    pub second: String,
    pub first_components: usize,
    pub second_components: usize,
    pub rank_first: usize,
    pub rank_second: usize,
    pub rank_union: usize,
    /// Ranks `(first, second, union)` from evaluation matrices, one per seed.
    pub sampled: Vec<(usize, usize, usize)>,
    pub trace_vanishes: bool,
    pub passes: bool,
}

fn sampled_ranks(a: &[Polynomial], b: &[Polynomial], seeds: &[u64]) -> Vec<(usize, usize, usize)> {
    let union: Vec<Polynomial> = a.iter().chain(b).cloned().collect();
    seeds
        .iter()
        .map(|&s| (linalg::evaluation_rank(a, s), linalg::evaluation_rank(b, s), linalg::evaluation_rank(&union, s)))
        .collect()
}

const RANK_SEEDS: [u64; 3] = [11, 23, 47];

/// The full Weyl condition has the same span as the contracted one.
pub fn verify_reduction_weyl(c: &CurvatureSet) -> RankReport {
    let full = cond_weyl_full(c);
    let contracted = cond_weyl_contracted(c);
    let union: Vec<Polynomial> = full.components.iter().chain(&contracted.components).cloned().collect();
    let (ra, rb, ru) =
        (linalg::span_rank(&full.components), linalg::span_rank(&contracted.components), linalg::span_rank(&union));
    let sampled = sampled_ranks(&full.components, &contracted.components, &RANK_SEEDS);
    let consistent = sampled.iter().all(|&s| s == (ra, rb, ru));
    let generic = !c.weyl.is_zero();
    RankReport {
        first: ConditionName::WeylFull.to_string(),
        second: ConditionName::WeylContracted.to_string(),
        first_components: full.components.len(),
        second_components: contracted.components.len(),
        rank_first: ra,
        rank_second: rb,
        rank_union: ru,
        sampled,
        trace_vanishes: true,
        passes: consistent && ra == rb && rb == ru && (!generic || ra == 5),
    }
}

/// The Ricci commutator spans the same space as S1 ∪ S2, and its trace is zero.
pub fn verify_decomposition_ricci(c: &CurvatureSet) -> RankReport {
    let full = cond_ricci_full(c);
    let s1 = cond_ricci_s1(c);
    let s2 = cond_ricci_s2(c);
    let split: Vec<Polynomial> = s1.components.iter().chain(&s2.components).cloned().collect();
    let union: Vec<Polynomial> = full.components.iter().chain(&split).cloned().collect();
    let (ra, rb, ru) = (linalg::span_rank(&full.components), linalg::span_rank(&split), linalg::span_rank(&union));
    let sampled = sampled_ranks(&full.components, &split, &RANK_SEEDS);
    let consistent = sampled.iter().all(|&s| s == (ra, rb, ru));
    let trace_vanishes = ricci_full_trace(c).is_zero();
    RankReport {
        first: ConditionName::RicciFull.to_string(),
        second: format!("{} + {}", ConditionName::RicciS1, ConditionName::RicciS2),
        first_components: full.components.len(),
        second_components: split.len(),
        rank_first: ra,
        rank_second: rb,
        rank_union: ru,
        sampled,
        trace_vanishes,
        passes: consistent && ra == rb && rb == ru && trace_vanishes,
    }
}

/// Exact instantiation showing that a condition does not hold identically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub values: BTreeMap<String, String>,
    /// Value of the first residual component that is nonzero there.
    pub residual: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(k, v)| format!("{k} = {v}")).collect();
        let at = if parts.is_empty() { "constant data".to_string() } else { parts.join(", ") };
        write!(f, "{at} (residual {})", self.residual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every residual component is the zero polynomial.
    Holds,
    /// Holds exactly on the common zero set of the generators.
    HoldsIff { generators: Vec<Polynomial>, witness: Witness },
    /// A generator is a nonzero constant once assumed-nonzero factors are removed.
    Fails { witness: Witness },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn generators(&self) -> &[Polynomial] {
        match self {
            Verdict::HoldsIff { generators, .. } => generators,
            _ => &[],
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::HoldsIff { witness, .. } | Verdict::Fails { witness } => Some(witness),
        }
    }

    pub fn and(&self, other: &Verdict) -> Verdict {
        match (self, other) {
            (Verdict::Holds, v) | (v, Verdict::Holds) => v.clone(),
            (Verdict::Fails { witness }, _) | (_, Verdict::Fails { witness }) => Verdict::Fails { witness: witness.clone() },
            (Verdict::HoldsIff { generators: a, witness }, Verdict::HoldsIff { generators: b, .. }) => {
                let mut generators = a.clone();
                for g in b {
                    if !generators.contains(g) {
                        generators.push(g.clone());
                    }
                }
                sort_generators(&mut generators);
                Verdict::HoldsIff { generators, witness: witness.clone() }
            }
        }
    }

    pub fn summary(&self) -> String {
        match self {
            Verdict::Holds => "holds identically".into(),
            Verdict::HoldsIff { generators, .. } => {
                let g: Vec<String> = generators.iter().map(|p| format!("{p} = 0")).collect();
                format!("holds iff {}", g.join(", "))
            }
            Verdict::Fails { .. } => "fails".into(),
        }
    }
}

fn sort_generators(g: &mut [Polynomial]) {
    g.sort_by_cached_key(|p| (p.total_degree(), p.len(), p.to_string()));
}

/// Symbols that may be divided out of residual components: those occurring
/// alone (as a bare symbol) in the assumption list, plus their partners.
fn nonzero_symbols(assumptions: &[Polynomial]) -> BTreeSet<Symbol> {
    let mut out = BTreeSet::new();
    for a in assumptions {
        if a.len() == 1 {
            if let Some((m, _)) = a.terms().next() {
                for &(s, _) in m.powers() {
                    out.insert(s);
                    out.insert(s.conj());
                }
            }
        }
    }
    out
}

/// Normalizes residual components into a deduplicated generator list: the
/// largest monomial factor made of assumed-nonzero symbols is removed and
/// each result is made monic.
pub fn residual_generators(components: &[Polynomial], assumptions: &[Polynomial]) -> Vec<Polynomial> {
    let allowed = nonzero_symbols(assumptions);
    let mut gens: Vec<Polynomial> = Vec::new();
    for p in components.iter().filter(|p| !p.is_zero()) {
        let content = p.monomial_content();
        let strip = crate::scalar::Monomial::from_powers(
            content.powers().iter().filter(|(s, _)| allowed.contains(s)).copied().collect(),
        );
        let g = p.div_monomial(&strip).expect("content divides").monic();
        if !gens.contains(&g) {
            gens.push(g);
        }
    }
    sort_generators(&mut gens);
    gens
}

/// Searches for an admissible exact point where some component is nonzero.
pub fn find_witness(components: &[Polynomial], assumptions: &[Polynomial]) -> Option<Witness> {
    let nonzero: Vec<&Polynomial> = components.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return None;
    }
    let symbols: BTreeSet<Symbol> = nonzero.iter().flat_map(|p| p.symbols()).collect();
    let mut rng = seeded_rng(WITNESS_SEED);
    for _ in 0..200 {
        let pt = admissible_point(&symbols, assumptions, &mut rng)?;
        if let Some(v) = nonzero.iter().filter_map(|p| p.eval(&pt)).find(|v| !v.is_zero()) {
            return Some(witness_from(&pt, &v));
        }
    }
    None
}

fn witness_from(pt: &HashMap<Symbol, GaussianRational>, residual: &GaussianRational) -> Witness {
    Witness {
        values: named_point(pt).into_iter().map(|(k, v)| (k, v.to_string())).collect(),
        residual: residual.to_string(),
    }
}

/// Verdict for the vanishing of a set of residual components.
pub fn verdict_for(components: &[Polynomial], assumptions: &[Polynomial]) -> Verdict {
    let gens = residual_generators(components, assumptions);
    if gens.is_empty() {
        return Verdict::Holds;
    }
    let witness = find_witness(components, assumptions).unwrap_or_default();
    if gens.iter().any(|g| g.as_constant().is_some()) {
        Verdict::Fails { witness }
    } else {
        Verdict::HoldsIff { generators: gens, witness }
    }
}

#[derive(Clone, Debug)]
pub struct Predicates {
    pub conformal: Verdict,
    pub ricci: Verdict,
    pub semisymmetric: Verdict,
}

pub fn conformal_components(c: &CurvatureSet) -> Vec<Polynomial> {
    let mut v = cond_mixed(c).components;
    v.extend(cond_weyl_contracted(c).components);
    v
}

pub fn ricci_components(c: &CurvatureSet) -> Vec<Polynomial> {
    let mut v = cond_ricci_s1(c).components;
    v.extend(cond_ricci_s2(c).components);
    v
}

/// Conformal, Ricci and full semi-symmetry verdicts under the given
/// non-vanishing assumptions.
pub fn predicates(c: &CurvatureSet, assumptions: &[Polynomial]) -> Result<Predicates> {
    let conformal = verdict_for(&conformal_components(c), assumptions);
    let ricci = verdict_for(&ricci_components(c), assumptions);
    let semisymmetric = conformal.and(&ricci);
    Ok(Predicates { conformal, ricci, semisymmetric })
}
