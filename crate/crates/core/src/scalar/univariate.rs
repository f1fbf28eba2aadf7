//! Dense univariate polynomials over the Gaussian rationals, with the gcd and
//! squarefree machinery used for root-multiplicity questions.

use super::{GaussianRational, Monomial, Polynomial, Symbol};
use crate::error::{Error, Result};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(GaussianRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            Some(lc) => {
                let inv = lc.inv().unwrap();
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
            None => UniPoly::zero(),
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        UniPoly::new(out)
    }

    pub fn scale(&self, c: &GaussianRational) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        self.sub(&other.scale(&GaussianRational::from_int(-1)))
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_default();
                    match other.coeffs.get(k) {
                        Some(b) => &a - b,
                        None => a,
                    }
                })
                .collect(),
        )
    }

    /// Pseudo-division: returns `(q, r)` with `lc(b)^(deg a − deg b + 1)·a = q·b + r`,
    /// computed without dividing coefficients.
    pub fn pseudo_div_rem(&self, b: &UniPoly) -> (UniPoly, UniPoly) {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let Some(da) = self.degree() else { return (UniPoly::zero(), UniPoly::zero()) };
        if da < db {
            return (UniPoly::zero(), self.clone());
        }
        let lc = b.leading().unwrap().clone();
        let mut r = self.clone();
        let mut q = UniPoly::zero();
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let shift = dr - db;
            let mut mono = vec![GaussianRational::zero(); shift + 1];
            mono[shift] = lr;
            let mono = UniPoly::new(mono);
            q = q.scale(&lc).add(&mono);
            r = r.scale(&lc).sub(&mono.mul(b));
            steps -= 1;
        }
        // Bring both to the fixed power lc^(da − db + 1).
        let fix = lc.pow(steps as u32);
        (q.scale(&fix), r.scale(&fix))
    }

    /// Exact quotient when `b` divides `self`; `None` otherwise.
    pub fn exact_div(&self, b: &UniPoly) -> Option<UniPoly> {
        let db = b.degree()?;
        let Some(da) = self.degree() else { return Some(UniPoly::zero()) };
        if da < db {
            return None;
        }
        let (q, r) = self.pseudo_div_rem(b);
        if !r.is_zero() {
            return None;
        }
        let scale = b.leading().unwrap().pow((da - db + 1) as u32);
        Some(q.scale(&scale.inv().unwrap()))
    }

    /// Monic greatest common divisor via a pseudo-remainder sequence, each
    /// remainder normalized to be monic.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.monic();
        let mut b = other.monic();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.pseudo_div_rem(&b);
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn to_polynomial(&self, var: Symbol) -> Polynomial {
        let mut out = Polynomial::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            out = &out + &Polynomial::term(c.clone(), Monomial::from_powers(vec![(var, k as u32)]));
        }
        out
    }

    /// Reads a polynomial in the single variable `var`.
    pub fn from_polynomial(p: &Polynomial, var: Symbol) -> Result<UniPoly> {
        let mut coeffs = vec![GaussianRational::zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            if m.powers().iter().any(|&(s, _)| s != var) {
                return Err(Error::SymbolicCoefficient(p.to_string()));
            }
            coeffs[m.degree_in(var) as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }
}

/// `q = unit · Π factorᵢ^multiplicityᵢ` with monic, squarefree, pairwise coprime factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: GaussianRational,
    pub factors: Vec<(UniPoly, u32)>,
}

impl SquarefreeDecomposition {
    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::new(vec![self.unit.clone()]);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Multiplicities with each factor's degree, e.g. `z²(z²+6)` gives `[2, 1, 1]`.
    pub fn root_multiplicities(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(*m, f.degree().unwrap_or(0)))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Yun's algorithm over a field of characteristic zero.
pub fn squarefree_uni(q: &UniPoly) -> Result<SquarefreeDecomposition> {
    let unit = q.leading().cloned().ok_or(Error::ZeroPolynomial)?;
    let f = q.monic();
    let mut factors = Vec::new();
    if f.degree() == Some(0) {
        return Ok(SquarefreeDecomposition { unit, factors });
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides");
    let mut c = df.exact_div(&a0).expect("gcd divides");
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            factors.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides");
        c = d.exact_div(&a).expect("gcd divides");
        d = c.sub(&b.derivative());
        i += 1;
    }
    Ok(SquarefreeDecomposition { unit, factors })
}

/// Squarefree decomposition of a polynomial in one variable. Returns the
/// variable (if any) alongside the decomposition.
pub fn squarefree_decomposition(q: &Polynomial) -> Result<(Option<Symbol>, SquarefreeDecomposition)> {
    let syms = q.symbols();
    if q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    match syms.len() {
        0 => Ok((None, squarefree_uni(&UniPoly::new(vec![q.as_constant().unwrap()]))?)),
        1 => {
            let var = *syms.iter().next().unwrap();
            Ok((Some(var), squarefree_uni(&UniPoly::from_polynomial(q, var)?)?))
        }
        _ => Err(Error::SymbolicCoefficient(q.to_string())),
    }
}
