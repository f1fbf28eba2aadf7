//! Curvature data at a point: the Weyl spinor Ψ, the trace-free Ricci spinor
//! Φ and the scalar Λ, together with the derived spinor X, the algebraic box
//! action and the standard frames used for classification.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classify::PetrovType;
use crate::error::{Error, Result};
use crate::scalar::{Bindings, GaussianRational, Polynomial, Symbol};
use crate::spinor::{IndexSlot, Primedness, SlotMatrix, Spinor, Variance};

/// Default symbol names shared by the standard forms and the generic set.
pub mod names {
    use crate::scalar::Symbol;

    pub fn lambda() -> Symbol {
        Symbol::real("lambda")
    }

    pub fn psi(n: usize) -> Symbol {
        Symbol::complex(&format!("psi{n}"))
    }

    /// `Φ_{ab'}`: real on the diagonal, `phi{a}{b}` above it and the
    /// conjugate partner `phi{b}{a}_bar` below it.
    pub fn phi(a: usize, b: usize) -> Symbol {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => Symbol::real(&format!("phi{a}{a}")),
            std::cmp::Ordering::Less => Symbol::complex(&format!("phi{a}{b}")),
            std::cmp::Ordering::Greater => Symbol::complex(&format!("phi{b}{a}")).conj(),
        }
    }
}

/// Ψ₀..Ψ₄, where Ψₙ is the component with `n` indices equal to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylSpinor {
    pub psi: [Polynomial; 5],
}

impl WeylSpinor {
    pub fn zero() -> Self {
        WeylSpinor { psi: Default::default() }
    }

    pub fn new(psi: [Polynomial; 5]) -> Self {
        WeylSpinor { psi }
    }

    pub fn from_constants(values: [GaussianRational; 5]) -> Self {
        WeylSpinor { psi: values.map(Polynomial::constant) }
    }

    pub fn generic() -> Self {
        WeylSpinor { psi: std::array::from_fn(|n| Polynomial::var(names::psi(n))) }
    }

    pub fn is_zero(&self) -> bool {
        self.psi.iter().all(Polynomial::is_zero)
    }

    pub fn is_constant(&self) -> bool {
        self.psi.iter().all(|p| p.as_constant().is_some())
    }

    /// Totally symmetric, four lower unprimed slots.
    pub fn to_spinor(&self) -> Spinor {
        Spinor::from_fn(vec![IndexSlot::LOWER; 4], |i| self.psi[i.iter().sum::<usize>()].clone())
    }

    pub fn from_spinor(s: &Spinor) -> Self {
        WeylSpinor {
            psi: std::array::from_fn(|n| {
                let idx: Vec<usize> = (0..4).map(|k| usize::from(k >= 4 - n)).collect();
                s.get(&idx).clone()
            }),
        }
    }

    pub fn conj(&self) -> Self {
        WeylSpinor { psi: std::array::from_fn(|n| self.psi[n].conj()) }
    }
}

/// `Φ_{ab'}` with `a`, `b` the number of 1s in the unprimed and primed pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RicciSpinor {
    phi: [[Polynomial; 3]; 3],
}

impl RicciSpinor {
    pub fn zero() -> Self {
        RicciSpinor { phi: Default::default() }
    }

    /// Checks Hermiticity `Φ_{ab'} = conj(Φ_{ba'})`.
    pub fn new(phi: [[Polynomial; 3]; 3]) -> Result<Self> {
        for a in 0..3 {
            for b in a..3 {
                if phi[a][b] != phi[b][a].conj() {
                    return Err(Error::Hermiticity(format!(
                        "Phi{a}{b}' = {} but conj(Phi{b}{a}') = {}",
                        phi[a][b],
                        phi[b][a].conj()
                    )));
                }
            }
        }
        Ok(RicciSpinor { phi })
    }

    /// Fills the lower triangle from the upper one by conjugation.
    pub fn from_upper(upper: [[Polynomial; 3]; 3]) -> Result<Self> {
        let mut phi = upper;
        for a in 0..3 {
            for b in 0..a {
                phi[a][b] = phi[b][a].conj();
            }
        }
        Self::new(phi)
    }

    pub fn generic() -> Self {
        RicciSpinor { phi: std::array::from_fn(|a| std::array::from_fn(|b| Polynomial::var(names::phi(a, b)))) }
    }

    /// Only the diagonal entry `Φ_{kk'}` set to `value` (must be real).
    pub fn diagonal(values: [Polynomial; 3]) -> Result<Self> {
        let mut phi: [[Polynomial; 3]; 3] = Default::default();
        for (k, v) in values.into_iter().enumerate() {
            phi[k][k] = v;
        }
        Self::new(phi)
    }

    pub fn get(&self, a: usize, b: usize) -> &Polynomial {
        &self.phi[a][b]
    }

    pub fn entries(&self) -> &[[Polynomial; 3]; 3] {
        &self.phi
    }

    pub fn is_zero(&self) -> bool {
        self.phi.iter().flatten().all(Polynomial::is_zero)
    }

    /// Slots `[A, B, A', B']`, all lower.
    pub fn to_spinor(&self) -> Spinor {
        Spinor::from_fn(
            vec![IndexSlot::LOWER, IndexSlot::LOWER, IndexSlot::LOWER_PRIMED, IndexSlot::LOWER_PRIMED],
            |i| self.phi[i[0] + i[1]][i[2] + i[3]].clone(),
        )
    }

    pub fn from_spinor(s: &Spinor) -> Result<Self> {
        let pair = |n: usize| [[0, 0], [0, 1], [1, 1]][n];
        let phi = std::array::from_fn(|a| {
            std::array::from_fn(|b| {
                let (u, p) = (pair(a), pair(b));
                s.get(&[u[0], u[1], p[0], p[1]]).clone()
            })
        });
        Self::new(phi)
    }

    fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        RicciSpinor { phi: std::array::from_fn(|a| std::array::from_fn(|b| f(&self.phi[a][b]))) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureSet {
    pub weyl: WeylSpinor,
    pub ricci: RicciSpinor,
    lambda: Polynomial,
}

impl CurvatureSet {
    pub fn new(weyl: WeylSpinor, ricci: RicciSpinor, lambda: Polynomial) -> Result<Self> {
        if !lambda.is_self_conjugate() {
            return Err(Error::ConjugationMismatch(format!("Lambda = {lambda} is not real")));
        }
        Ok(CurvatureSet { weyl, ricci, lambda })
    }

    /// All fourteen symbols free: Ψ₀..Ψ₄, the nine Φ entries and Λ.
    pub fn generic() -> Self {
        CurvatureSet {
            weyl: WeylSpinor::generic(),
            ricci: RicciSpinor::generic(),
            lambda: Polynomial::var(names::lambda()),
        }
    }

    pub fn lambda(&self) -> &Polynomial {
        &self.lambda
    }

    pub fn with_ricci(&self, ricci: RicciSpinor) -> Self {
        CurvatureSet { ricci, ..self.clone() }
    }

    pub fn with_weyl(&self, weyl: WeylSpinor) -> Self {
        CurvatureSet { weyl, ..self.clone() }
    }

    pub fn with_lambda(&self, lambda: Polynomial) -> Result<Self> {
        Self::new(self.weyl.clone(), self.ricci.clone(), lambda)
    }

    pub fn weyl_spinor(&self) -> Spinor {
        self.weyl.to_spinor()
    }

    pub fn ricci_spinor(&self) -> Spinor {
        self.ricci.to_spinor()
    }

    /// Applies a substitution to every component.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Self> {
        bindings.validate()?;
        let s = |p: &Polynomial| p.substitute_unchecked(bindings);
        Ok(CurvatureSet {
            weyl: WeylSpinor { psi: std::array::from_fn(|n| s(&self.weyl.psi[n])) },
            ricci: self.ricci.map(s),
            lambda: s(&self.lambda),
        })
    }

    pub fn symbols(&self) -> std::collections::BTreeSet<Symbol> {
        let mut out = self.lambda.symbols();
        for p in &self.weyl.psi {
            out.extend(p.symbols());
        }
        for p in self.ricci.phi.iter().flatten() {
            out.extend(p.symbols());
        }
        out
    }

    /// True when no component carries a symbol.
    pub fn is_constant(&self) -> bool {
        self.symbols().is_empty()
    }
}

impl fmt::Display for CurvatureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Lambda = {}", self.lambda)?;
        for (n, p) in self.weyl.psi.iter().enumerate() {
            writeln!(f, "Psi{n} = {p}")?;
        }
        for a in 0..3 {
            for b in 0..3 {
                writeln!(f, "Phi{a}{b}' = {}", self.ricci.phi[a][b])?;
            }
        }
        Ok(())
    }
}

/// `X_ABCD = Ψ_ABCD + Λ(ε_AC ε_BD + ε_AD ε_BC)`.
pub fn build_x(c: &CurvatureSet) -> Spinor {
    let eps = Spinor::epsilon();
    let e = |a: usize, b: usize| eps.get(&[a, b]).clone();
    Spinor::from_fn(vec![IndexSlot::LOWER; 4], |i| {
        let (a, b, cc, d) = (i[0], i[1], i[2], i[3]);
        let pair = &(&e(a, cc) * &e(b, d)) + &(&e(a, d) * &e(b, cc));
        &c.weyl.psi[i.iter().sum::<usize>()] + &(&c.lambda * &pair)
    })
}

/// Which operator pair the box acts with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoxKind {
    /// `□_{AB}`
    Unprimed,
    /// `□_{A'B'}`
    Primed,
}

/// The algebraic commutator action on a spinor with lower slots, by the
/// Leibniz rule from
/// `□_{AB} κ_C = −X_{ABC}{}^E κ_E`, `□_{AB} τ_{C'} = −Φ_{ABC'}{}^{E'} τ_{E'}`
/// and their conjugates for `□_{A'B'}`. The operator pair is prepended.
pub fn box_on(c: &CurvatureSet, target: &Spinor, kind: BoxKind) -> Result<Spinor> {
    if target.slots().iter().any(|s| s.variance == Variance::Upper) {
        return Err(Error::UpperSlot);
    }
    let pair_slot = match kind {
        BoxKind::Unprimed => IndexSlot::LOWER,
        BoxKind::Primed => IndexSlot::LOWER_PRIMED,
    };
    let mut out_slots = vec![pair_slot; 2];
    out_slots.extend_from_slice(target.slots());
    let mut out = Spinor::zeros(out_slots);
    let k = target.rank();
    if k == 0 {
        return Ok(out);
    }
    let x = build_x(c);
    let phi = c.ricci_spinor();
    for s in 0..k {
        // operator factor with slots [pair, pair, S, E]
        let op = match (kind, target.slots()[s].primedness) {
            (BoxKind::Unprimed, Primedness::Unprimed) => x.clone(),
            (BoxKind::Unprimed, Primedness::Primed) => phi.clone(),
            (BoxKind::Primed, Primedness::Unprimed) => phi.permute(&[2, 3, 0, 1])?,
            (BoxKind::Primed, Primedness::Primed) => x.conj(),
        };
        let term = op.raise(3)?.outer(target).contract(3, 4 + s)?;
        // term slots: [P, P, S, t_0.., t_{s-1}, t_{s+1}, ..]
        let mut order = vec![0, 1];
        order.extend((0..k).map(|j| match j.cmp(&s) {
            std::cmp::Ordering::Less => 3 + j,
            std::cmp::Ordering::Equal => 2,
            std::cmp::Ordering::Greater => 2 + j,
        }));
        out = out.sub(&term.permute(&order)?)?;
    }
    Ok(out)
}

/// Weyl spinor in a standard frame with the non-vanishing assumptions the
/// type requires.
#[derive(Clone, Debug)]
pub struct StandardWeyl {
    pub weyl: WeylSpinor,
    pub nonzero: Vec<Polynomial>,
}

/// Standard frames: I → (ψ₀,0,ψ₂,0,ψ₀), II → (0,0,ψ₂,0,ψ₄), D → (0,0,ψ₂,0,0),
/// III → (0,0,0,ψ₃,0), N → (0,0,0,0,ψ₄), O → 0.
pub fn standard_weyl(petrov: PetrovType) -> StandardWeyl {
    let v = |n: usize| Polynomial::var(names::psi(n));
    let z = Polynomial::zero;
    let (psi, nonzero) = match petrov {
        PetrovType::I => {
            // distinct roots of ψ₀(z⁴ + 1) + 6ψ₂z² need ψ₀ ≠ 0 and 9ψ₂² ≠ ψ₀²
            let disc = &v(2).pow(2).scale(&9.into()) - &v(0).pow(2);
            ([v(0), z(), v(2), z(), v(0)], vec![v(0), disc])
        }
        PetrovType::II => ([z(), z(), v(2), z(), v(4)], vec![v(2), v(4)]),
        PetrovType::D => ([z(), z(), v(2), z(), z()], vec![v(2)]),
        PetrovType::III => ([z(), z(), z(), v(3), z()], vec![v(3)]),
        PetrovType::N => ([z(), z(), z(), z(), v(4)], vec![v(4)]),
        PetrovType::O => ([z(), z(), z(), z(), z()], vec![]),
    };
    StandardWeyl { weyl: WeylSpinor::new(psi), nonzero }
}

/// Ricci patterns appearing in the classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SegrePattern {
    /// Φ = 0, Λ = 0.
    Vacuum,
    /// Φ = 0 with Λ; A1[(111,1)].
    LambdaTerm,
    /// Only Φ₁₁' nonzero; A1[(11)(1,1)].
    NonNullEm,
    /// Only Φ₂₂' nonzero; A3[(11,2)].
    PureRadiation,
    /// Φ₀₀' = Φ₂₂' = 2Φ₁₁'; A1[(111),1].
    PerfectFluid,
    /// Φ₀₀' = Φ₂₂' = −2Φ₁₁'; A1[1(11,1)].
    Tachyon,
    /// Anything else.
    Other,
}

impl SegrePattern {
    pub const ALL: [SegrePattern; 7] = [
        SegrePattern::Vacuum,
        SegrePattern::LambdaTerm,
        SegrePattern::NonNullEm,
        SegrePattern::PureRadiation,
        SegrePattern::PerfectFluid,
        SegrePattern::Tachyon,
        SegrePattern::Other,
    ];

    pub fn label(self) -> &'static str {
        match self {
            SegrePattern::Vacuum => "vacuum",
            SegrePattern::LambdaTerm => "A1[(111,1)]",
            SegrePattern::NonNullEm => "A1[(11)(1,1)]",
            SegrePattern::PureRadiation => "A3[(11,2)]",
            SegrePattern::PerfectFluid => "A1[(111),1]",
            SegrePattern::Tachyon => "A1[1(11,1)]",
            SegrePattern::Other => "other",
        }
    }
}

impl fmt::Display for SegrePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for SegrePattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        SegrePattern::ALL
            .into_iter()
            .find(|p| p.label().eq_ignore_ascii_case(t))
            .or(match t.to_ascii_lowercase().as_str() {
                "lambda" | "lambda-term" => Some(SegrePattern::LambdaTerm),
                "perfect-fluid" | "perfect_fluid" => Some(SegrePattern::PerfectFluid),
                "tachyon" => Some(SegrePattern::Tachyon),
                "generic" => Some(SegrePattern::Other),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownPattern(s.to_string()))
    }
}

/// `Φ_{ab'} = value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiRelation {
    pub component: (usize, usize),
    pub value: Polynomial,
}

impl fmt::Display for PhiRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Phi{}{}' = {}", self.component.0, self.component.1, self.value)
    }
}

#[derive(Clone, Debug)]
pub struct StandardRicci {
    pub ricci: RicciSpinor,
    pub relations: Vec<PhiRelation>,
    pub nonzero: Vec<Polynomial>,
}

/// Ricci spinor in standard form for a pattern, with its component relations.
pub fn standard_phi(pattern: SegrePattern) -> StandardRicci {
    let p11 = || Polynomial::var(names::phi(1, 1));
    let z = Polynomial::zero;
    let diag = |v: [Polynomial; 3]| RicciSpinor::diagonal(v).expect("real diagonal");
    let fluid = |k: i64| {
        let value = p11().scale(&k.into());
        StandardRicci {
            ricci: diag([value.clone(), p11(), value.clone()]),
            relations: vec![
                PhiRelation { component: (0, 0), value: value.clone() },
                PhiRelation { component: (2, 2), value },
            ],
            nonzero: vec![p11()],
        }
    };
    match pattern {
        SegrePattern::Vacuum | SegrePattern::LambdaTerm => {
            StandardRicci { ricci: RicciSpinor::zero(), relations: vec![], nonzero: vec![] }
        }
        SegrePattern::NonNullEm => {
            StandardRicci { ricci: diag([z(), p11(), z()]), relations: vec![], nonzero: vec![p11()] }
        }
        SegrePattern::PureRadiation => {
            let p22 = Polynomial::var(names::phi(2, 2));
            StandardRicci { ricci: diag([z(), z(), p22.clone()]), relations: vec![], nonzero: vec![p22] }
        }
        SegrePattern::PerfectFluid => fluid(2),
        SegrePattern::Tachyon => fluid(-2),
        SegrePattern::Other => StandardRicci { ricci: RicciSpinor::generic(), relations: vec![], nonzero: vec![] },
    }
}

/// Unimodular change of spinor dyad.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadTransform {
    m: SlotMatrix,
}

impl DyadTransform {
    pub fn new(m: SlotMatrix) -> Result<Self> {
        let det = &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]);
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(DyadTransform { m })
    }

    pub fn identity() -> Self {
        DyadTransform {
            m: [[GaussianRational::one(), GaussianRational::zero()], [GaussianRational::zero(), GaussianRational::one()]],
        }
    }

    /// `diag(k, 1/k)`.
    pub fn boost(k: GaussianRational) -> Result<Self> {
        let inv = k.inv().ok_or_else(|| Error::NotUnimodular("0".into()))?;
        Self::new([[k, GaussianRational::zero()], [GaussianRational::zero(), inv]])
    }

    /// `[[1, a], [0, 1]]`.
    pub fn null_rotation_upper(a: GaussianRational) -> Self {
        DyadTransform { m: [[GaussianRational::one(), a], [GaussianRational::zero(), GaussianRational::one()]] }
    }

    /// `[[1, 0], [b, 1]]`.
    pub fn null_rotation_lower(b: GaussianRational) -> Self {
        DyadTransform { m: [[GaussianRational::one(), GaussianRational::zero()], [b, GaussianRational::one()]] }
    }

    pub fn matrix(&self) -> &SlotMatrix {
        &self.m
    }

    /// Matrix product `self ∘ other`.
    pub fn compose(&self, other: &DyadTransform) -> DyadTransform {
        let (a, b) = (&self.m, &other.m);
        let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        DyadTransform { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }
}

/// Transforms every unprimed slot by `m` and every primed slot by `conj(m)`.
pub fn dyad_transform(c: &CurvatureSet, t: &DyadTransform) -> Result<CurvatureSet> {
    let weyl = WeylSpinor::from_spinor(&c.weyl_spinor().transform(t.matrix())?);
    let ricci = RicciSpinor::from_spinor(&c.ricci_spinor().transform(t.matrix())?)?;
    Ok(CurvatureSet { weyl, ricci, lambda: c.lambda.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym_check(s: &Spinor, order: &[usize]) -> bool {
        s.permute(order).unwrap() == *s
    }

    #[test]
    fn x_reduces_to_psi_without_lambda() {
        let c = CurvatureSet::generic().with_lambda(Polynomial::zero()).unwrap();
        assert_eq!(build_x(&c), c.weyl_spinor());
    }

    #[test]
    fn x_from_lambda_only() {
        let c = CurvatureSet::new(WeylSpinor::zero(), RicciSpinor::zero(), Polynomial::var(names::lambda())).unwrap();
        let x = build_x(&c);
        // X_{0101} = Λ(ε₀₀ε₁₁ + ε₀₁ε₁₀), X_{0011} = Λ(ε₀₁ε₀₁ + ε₀₁ε₀₁)
        assert_eq!(x.get(&[0, 1, 0, 1]).to_string(), "-lambda");
        assert_eq!(x.get(&[0, 1, 1, 0]).to_string(), "-lambda");
        assert_eq!(x.get(&[0, 0, 1, 1]).to_string(), "2*lambda");
        assert!(x.get(&[0, 0, 0, 0]).is_zero());
    }

    #[test]
    fn x_symmetries_and_totally_symmetric_part() {
        let c = CurvatureSet::generic();
        let x = build_x(&c);
        assert!(sym_check(&x, &[1, 0, 2, 3]));
        assert!(sym_check(&x, &[0, 1, 3, 2]));
        assert!(sym_check(&x, &[2, 3, 0, 1]));
        assert_eq!(x.symmetrize(&[0, 1, 2, 3]).unwrap(), c.weyl_spinor());
    }

    #[test]
    fn hermiticity_checked() {
        let mut phi: [[Polynomial; 3]; 3] = Default::default();
        phi[0][1] = Polynomial::constant(GaussianRational::complex((1, 1), (1, 1)));
        phi[1][0] = Polynomial::constant(GaussianRational::complex((1, 1), (-2, 1)));
        assert!(matches!(RicciSpinor::new(phi), Err(Error::Hermiticity(_))));
        let generic = RicciSpinor::generic();
        assert_eq!(generic.to_spinor().conj(), generic.to_spinor());
        let mut imag = <[[Polynomial; 3]; 3]>::default();
        imag[1][1] = Polynomial::constant(GaussianRational::i());
        assert!(RicciSpinor::new(imag).is_err());
    }

    #[test]
    fn box_on_scalar_is_zero() {
        let c = CurvatureSet::generic();
        let out = box_on(&c, &Spinor::scalar(c.lambda().clone()), BoxKind::Unprimed).unwrap();
        assert_eq!(out.rank(), 2);
        assert!(out.is_zero());
        let up = Spinor::epsilon().raise(0).unwrap();
        assert!(matches!(box_on(&c, &up, BoxKind::Unprimed), Err(Error::UpperSlot)));
    }

    #[test]
    fn standard_weyl_patterns() {
        let d = standard_weyl(PetrovType::D);
        assert_eq!(d.weyl.psi.iter().filter(|p| !p.is_zero()).count(), 1);
        assert_eq!(d.weyl.psi[2].to_string(), "psi2");
        let n = standard_weyl(PetrovType::N);
        assert_eq!(n.weyl.psi[4].to_string(), "psi4");
        assert!(n.weyl.psi[..4].iter().all(Polynomial::is_zero));
        assert!(standard_weyl(PetrovType::O).weyl.is_zero());
        assert_eq!(standard_weyl(PetrovType::I).weyl.psi[0], standard_weyl(PetrovType::I).weyl.psi[4]);
    }

    #[test]
    fn standard_phi_patterns() {
        let em = standard_phi(SegrePattern::NonNullEm);
        let nz: Vec<_> = (0..9).filter(|k| !em.ricci.get(k / 3, k % 3).is_zero()).collect();
        assert_eq!(nz, vec![4]);
        let pf = standard_phi(SegrePattern::PerfectFluid);
        assert_eq!(pf.ricci.get(0, 0), &pf.ricci.get(1, 1).scale(&2.into()));
        assert_eq!(pf.ricci.get(2, 2), &pf.ricci.get(1, 1).scale(&2.into()));
        assert_eq!(pf.relations.len(), 2);
        let t = standard_phi(SegrePattern::Tachyon);
        assert_eq!(t.ricci.get(0, 0), &t.ricci.get(1, 1).scale(&(-2).into()));
        assert_eq!(t.ricci.get(2, 2), &t.ricci.get(1, 1).scale(&(-2).into()));
        assert!("B2[???]".parse::<SegrePattern>().is_err());
        assert_eq!("A3[(11,2)]".parse::<SegrePattern>().unwrap(), SegrePattern::PureRadiation);
    }

    #[test]
    fn dyad_identity_and_boost_weight() {
        let c = CurvatureSet::generic();
        assert_eq!(dyad_transform(&c, &DyadTransform::identity()).unwrap(), c);
        let n = CurvatureSet::new(standard_weyl(PetrovType::N).weyl, RicciSpinor::zero(), Polynomial::zero()).unwrap();
        let k = GaussianRational::from_int(3);
        let boosted = dyad_transform(&n, &DyadTransform::boost(k.clone()).unwrap()).unwrap();
        // Ψ₄ = Ψ_{1111} picks up (1/k)⁴
        let expected = n.weyl.psi[4].scale(&k.inv().unwrap().pow(4));
        assert_eq!(boosted.weyl.psi[4], expected);
        assert!(boosted.weyl.psi[..4].iter().all(Polynomial::is_zero));
        let bad = [[GaussianRational::from_int(2), GaussianRational::zero()], [GaussianRational::zero(), GaussianRational::one()]];
        assert!(matches!(DyadTransform::new(bad), Err(Error::NotUnimodular(_))));
    }

    #[test]
    fn dyad_group_law() {
        let c = CurvatureSet::generic();
        let t1 = DyadTransform::null_rotation_upper(GaussianRational::complex((1, 2), (1, 1)));
        let t2 = DyadTransform::boost(GaussianRational::complex((2, 1), (-1, 3))).unwrap();
        let lhs = dyad_transform(&c, &t1.compose(&t2)).unwrap();
        let rhs = dyad_transform(&dyad_transform(&c, &t2).unwrap(), &t1).unwrap();
        assert_eq!(lhs, rhs);
    }
}
