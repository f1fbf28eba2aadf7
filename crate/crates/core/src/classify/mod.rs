//! Petrov typing, Ricci pattern recognition, kernel solving and per-case
//! classification.

mod kernel;
mod table;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::conditions::{
    cond_mixed, cond_ricci_s1, cond_ricci_s2, cond_weyl_contracted, predicates, residual_generators, ConditionName,
    Verdict,
};
use crate::curvature::{standard_phi, standard_weyl, CurvatureSet, RicciSpinor, SegrePattern, WeylSpinor};
use crate::error::{Error, Result};
use crate::scalar::{squarefree_uni, GaussianRational, Polynomial, UniPoly};

pub use kernel::{phi_kernel, standard_kernel, KernelReport, KernelSystem};
pub use table::{reproduce_table, TableCell, TableDocument, TableRow, COLUMNS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PetrovType {
    I,
    II,
    D,
    III,
    N,
    O,
}

impl PetrovType {
    pub const ALL: [PetrovType; 6] =
        [PetrovType::I, PetrovType::II, PetrovType::III, PetrovType::D, PetrovType::N, PetrovType::O];

    /// Multiplicities of the principal spinors, largest first.
    pub fn partition(self) -> &'static [u32] {
        match self {
            PetrovType::I => &[1, 1, 1, 1],
            PetrovType::II => &[2, 1, 1],
            PetrovType::D => &[2, 2],
            PetrovType::III => &[3, 1],
            PetrovType::N => &[4],
            PetrovType::O => &[],
        }
    }

    fn from_partition(p: &[u32]) -> Option<PetrovType> {
        PetrovType::ALL.into_iter().find(|t| t.partition() == p)
    }
}

impl fmt::Display for PetrovType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PetrovType::I => "I",
            PetrovType::II => "II",
            PetrovType::D => "D",
            PetrovType::III => "III",
            PetrovType::N => "N",
            PetrovType::O => "O",
        };
        f.write_str(s)
    }
}

impl FromStr for PetrovType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" => Ok(PetrovType::I),
            "II" => Ok(PetrovType::II),
            "D" => Ok(PetrovType::D),
            "III" => Ok(PetrovType::III),
            "N" => Ok(PetrovType::N),
            "O" | "0" => Ok(PetrovType::O),
            _ => Err(Error::UnknownPetrov(s.to_string())),
        }
    }
}

const BINOMIAL4: [i64; 5] = [1, 4, 6, 4, 1];

/// Coefficients of `Σ C(4,k) Ψ_k z^k`, lowest degree first.
pub fn weyl_quartic(values: &[GaussianRational; 5]) -> UniPoly {
    UniPoly::new((0..5).map(|k| &values[k] * &GaussianRational::from_int(BINOMIAL4[k])).collect())
}

/// Multiplicity partition of the principal spinors; a degree drop of `d`
/// counts as a root of multiplicity `d` at infinity.
pub fn principal_multiplicities(values: &[GaussianRational; 5]) -> Vec<u32> {
    let q = weyl_quartic(values);
    let Some(deg) = q.degree() else { return Vec::new() };
    let mut mult = squarefree_uni(&q).expect("nonzero quartic").root_multiplicities();
    if deg < 4 {
        mult.push((4 - deg) as u32);
    }
    mult.sort_unstable_by(|a, b| b.cmp(a));
    mult
}

/// Petrov type of a Weyl spinor with constant components.
pub fn petrov_type(w: &WeylSpinor) -> Result<PetrovType> {
    let values: Vec<GaussianRational> = w
        .psi
        .iter()
        .map(|p| p.as_constant().ok_or_else(|| Error::SymbolicCoefficient(p.to_string())))
        .collect::<Result<_>>()?;
    let values: [GaussianRational; 5] = values.try_into().expect("five components");
    let mult = principal_multiplicities(&values);
    Ok(PetrovType::from_partition(&mult).expect("partitions of four cover every type"))
}

/// Type of a symbolic Weyl spinor written in one of the standard forms.
pub fn recognize_standard_form(w: &WeylSpinor) -> Option<PetrovType> {
    let zero: Vec<bool> = w.psi.iter().map(Polynomial::is_zero).collect();
    match zero.as_slice() {
        [true, true, true, true, true] => Some(PetrovType::O),
        [true, true, true, true, false] => Some(PetrovType::N),
        [true, true, true, false, true] => Some(PetrovType::III),
        [true, true, false, true, true] => Some(PetrovType::D),
        [true, true, false, true, false] => Some(PetrovType::II),
        [false, true, false, true, false] if w.psi[0] == w.psi[4] => Some(PetrovType::I),
        _ => None,
    }
}

/// First matching table pattern, by exact comparison of components.
pub fn segre_pattern(r: &RicciSpinor, lambda: &Polynomial) -> SegrePattern {
    let e = r.entries();
    let only = |keep: &[(usize, usize)]| {
        (0..3).all(|a| (0..3).all(|b| keep.contains(&(a, b)) || e[a][b].is_zero()))
            && keep.iter().all(|&(a, b)| !e[a][b].is_zero())
    };
    if r.is_zero() {
        return if lambda.is_zero() { SegrePattern::Vacuum } else { SegrePattern::LambdaTerm };
    }
    if only(&[(1, 1)]) {
        return SegrePattern::NonNullEm;
    }
    if only(&[(2, 2)]) {
        return SegrePattern::PureRadiation;
    }
    if only(&[(0, 0), (1, 1), (2, 2)]) && e[0][0] == e[2][2] {
        let p11 = &e[1][1];
        if e[0][0] == p11.scale(&GaussianRational::from_int(2)) {
            return SegrePattern::PerfectFluid;
        }
        if e[0][0] == p11.scale(&GaussianRational::from_int(-2)) {
            return SegrePattern::Tachyon;
        }
    }
    SegrePattern::Other
}

/// Generators of one nonvanishing condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedResidual {
    pub condition: ConditionName,
    pub generators: Vec<Polynomial>,
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub petrov: PetrovType,
    pub segre: SegrePattern,
    pub conformal: Verdict,
    pub ricci: Verdict,
    pub semisymmetric: Verdict,
    pub residuals: Vec<NamedResidual>,
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Petrov type:      {}", self.petrov)?;
        writeln!(f, "Ricci pattern:    {}", self.segre)?;
        for (name, v) in [("conformally s-s", &self.conformal), ("Ricci s-s", &self.ricci), ("semi-symmetric", &self.semisymmetric)] {
            writeln!(f, "{name:<17} {}", v.summary())?;
            if let Some(w) = v.witness() {
                writeln!(f, "{:<17} witness: {w}", "")?;
            }
        }
        for r in &self.residuals {
            let g: Vec<String> = r.generators.iter().map(|p| p.to_string()).collect();
            writeln!(f, "residual {}: {}", r.condition, g.join("; "))?;
        }
        Ok(())
    }
}

/// Classifies curvature data. Constant Ψ is typed from its quartic; symbolic
/// Ψ uses `hint` or else must be written in a standard form.
pub fn classify_case(
    c: &CurvatureSet,
    assumptions: &[Polynomial],
    hint: Option<PetrovType>,
) -> Result<ClassificationReport> {
    let petrov = if c.weyl.is_constant() {
        petrov_type(&c.weyl)?
    } else {
        hint.or_else(|| recognize_standard_form(&c.weyl)).ok_or(Error::PetrovUndetermined)?
    };
    let segre = segre_pattern(&c.ricci, c.lambda());
    let p = predicates(c, assumptions)?;
    let residuals = [cond_mixed(c), cond_weyl_contracted(c), cond_ricci_s1(c), cond_ricci_s2(c)]
        .into_iter()
        .filter(|r| !r.vanishes)
        .map(|r| NamedResidual { condition: r.name, generators: residual_generators(&r.components, assumptions) })
        .collect();
    Ok(ClassificationReport {
        petrov,
        segre,
        conformal: p.conformal,
        ricci: p.ricci,
        semisymmetric: p.semisymmetric,
        residuals,
    })
}

/// Standard-form family for a Petrov type and Ricci pattern, with the
/// nonvanishing assumptions of both.
pub fn standard_family(t: PetrovType, pattern: SegrePattern, lambda: Polynomial) -> (CurvatureSet, Vec<Polynomial>) {
    let w = standard_weyl(t);
    let r = standard_phi(pattern);
    let mut nonzero = w.nonzero;
    nonzero.extend(r.nonzero);
    (CurvatureSet::new(w.weyl, r.ricci, lambda).expect("real lambda"), nonzero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::names;

    fn w(v: [(i64, i64); 5]) -> WeylSpinor {
        WeylSpinor::from_constants(v.map(|(re, im)| GaussianRational::complex((re, 1), (im, 1))))
    }

    #[test]
    fn standard_constants_type_correctly() {
        assert_eq!(petrov_type(&w([(0, 0), (0, 0), (1, 0), (0, 0), (0, 0)])).unwrap(), PetrovType::D);
        assert_eq!(petrov_type(&w([(0, 0), (0, 0), (0, 0), (0, 0), (1, 0)])).unwrap(), PetrovType::N);
        assert_eq!(petrov_type(&w([(0, 0), (0, 0), (0, 0), (1, 0), (0, 0)])).unwrap(), PetrovType::III);
        assert_eq!(petrov_type(&w([(0, 0), (0, 0), (1, 0), (0, 0), (1, 0)])).unwrap(), PetrovType::II);
        assert_eq!(petrov_type(&w([(1, 0), (0, 0), (1, 0), (0, 0), (1, 0)])).unwrap(), PetrovType::I);
        assert_eq!(petrov_type(&WeylSpinor::zero()).unwrap(), PetrovType::O);
    }

    #[test]
    fn type_iii_has_a_root_at_infinity() {
        let v = [0, 0, 0, 1, 0].map(GaussianRational::from_int);
        assert_eq!(principal_multiplicities(&v), vec![3, 1]);
        assert_eq!(weyl_quartic(&v).degree(), Some(3));
    }

    #[test]
    fn degenerate_type_i_frame_is_d() {
        // ψ₀ = 3ψ₂ makes (z² + 1)² up to scale: a repeated pair
        assert_eq!(petrov_type(&w([(3, 0), (0, 0), (1, 0), (0, 0), (3, 0)])).unwrap(), PetrovType::D);
    }

    #[test]
    fn symbolic_weyl_needs_a_form() {
        assert!(matches!(petrov_type(&WeylSpinor::generic()), Err(Error::SymbolicCoefficient(_))));
        assert_eq!(recognize_standard_form(&WeylSpinor::generic()), None);
        for t in PetrovType::ALL {
            assert_eq!(recognize_standard_form(&standard_weyl(t).weyl), Some(t));
        }
    }

    #[test]
    fn parse_petrov() {
        assert_eq!("0".parse::<PetrovType>().unwrap(), PetrovType::O);
        assert_eq!("iii".parse::<PetrovType>().unwrap(), PetrovType::III);
        assert!("IV".parse::<PetrovType>().is_err());
    }

    #[test]
    fn patterns_recognized() {
        let lam = Polynomial::var(names::lambda());
        for p in [SegrePattern::NonNullEm, SegrePattern::PureRadiation, SegrePattern::PerfectFluid, SegrePattern::Tachyon, SegrePattern::Other] {
            assert_eq!(segre_pattern(&standard_phi(p).ricci, &lam), p);
        }
        assert_eq!(segre_pattern(&RicciSpinor::zero(), &lam), SegrePattern::LambdaTerm);
        assert_eq!(segre_pattern(&RicciSpinor::zero(), &Polynomial::zero()), SegrePattern::Vacuum);
    }

    #[test]
    fn flat_is_semisymmetric() {
        let c = CurvatureSet::new(WeylSpinor::zero(), RicciSpinor::zero(), Polynomial::zero()).unwrap();
        let r = classify_case(&c, &[], None).unwrap();
        assert!(r.semisymmetric.holds());
        assert_eq!(r.segre, SegrePattern::Vacuum);
        assert!(r.residuals.is_empty());
    }
}
