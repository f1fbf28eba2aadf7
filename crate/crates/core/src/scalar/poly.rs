use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{GaussianRational, Symbol};
use crate::error::{Error, Result};

/// Power product of symbols, sorted by symbol with no zero exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(s: Symbol) -> Self {
        Self(vec![(s, 1)])
    }

    pub fn from_powers(mut powers: Vec<(Symbol, u32)>) -> Self {
        powers.retain(|&(_, e)| e > 0);
        powers.sort_by_key(|&(s, _)| s);
        let mut out: Vec<(Symbol, u32)> = Vec::with_capacity(powers.len());
        for (s, e) in powers {
            match out.last_mut() {
                Some((t, f)) if *t == s => *f += e,
                _ => out.push((s, e)),
            }
        }
        Self(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn powers(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.0.iter().find(|&&(t, _)| t == s).map_or(0, |&(_, e)| e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, ea) = self.0[i];
            let (b, eb) = other.0[j];
            if a == b {
                out.push((a, ea + eb));
                i += 1;
                j += 1;
            } else if a < b {
                out.push((a, ea));
                i += 1;
            } else {
                out.push((b, eb));
                j += 1;
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(s, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == s {
                let f = other.0[j].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((s, e - f));
                }
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < s {
                return None;
            } else {
                out.push((s, e));
            }
        }
        (j == other.0.len()).then_some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .filter_map(|&(s, e)| {
                    let f = other.degree_in(s);
                    (f > 0).then(|| (s, e.min(f)))
                })
                .collect(),
        )
    }

    pub fn conj(&self) -> Monomial {
        Monomial::from_powers(self.0.iter().map(|&(s, e)| (s.conj(), e)).collect())
    }

    /// Name-based key used for deterministic printing.
    fn print_key(&self) -> (std::cmp::Reverse<u32>, Vec<(String, std::cmp::Reverse<u32>)>) {
        let mut names: Vec<(String, std::cmp::Reverse<u32>)> =
            self.0.iter().map(|&(s, e)| (s.name(), std::cmp::Reverse(e))).collect();
        names.sort();
        (std::cmp::Reverse(self.degree()), names)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(String, u32)> = self.0.iter().map(|&(s, e)| (s.name(), e)).collect();
        parts.sort();
        let mut first = true;
        for (name, e) in parts {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Multivariate polynomial over the Gaussian rationals.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, GaussianRational>,
}

/// A symbol assignment used for substitution. Validated against the
/// conjugation involution when applied.
#[derive(Clone, Debug, Default)]
pub struct Bindings {
    map: HashMap<Symbol, Polynomial>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(&mut self, s: Symbol, value: Polynomial) -> &mut Self {
        self.map.insert(s, value);
        self
    }

    /// Binds `s ↦ value` and the partner `conj(s) ↦ conj(value)`.
    pub fn bind_with_conjugate(&mut self, s: Symbol, value: Polynomial) -> &mut Self {
        let c = value.conj();
        self.map.insert(s.conj(), c);
        self.map.insert(s, value);
        self
    }

    pub fn get(&self, s: Symbol) -> Option<&Polynomial> {
        self.map.get(&s)
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Symbol, &Polynomial)> {
        self.map.iter()
    }

    /// Checks that the assignment commutes with conjugation.
    pub fn validate(&self) -> Result<()> {
        for (&s, v) in &self.map {
            let partner = s.conj();
            let ok = match self.map.get(&partner) {
                Some(pv) => *pv == v.conj(),
                None => false,
            };
            if !ok {
                return Err(Error::ConjugationMismatch(format!(
                    "binding {s} = {v} has no matching conjugate binding for {partner}"
                )));
            }
        }
        Ok(())
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Self { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::ratio(num, den))
    }

    pub fn var(s: Symbol) -> Self {
        Self::term(GaussianRational::one(), Monomial::var(s))
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Alias spelling out the vanishing verdict used by the condition checks.
    pub fn is_identically_zero(&self) -> bool {
        self.is_zero()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    /// The constant value if no symbol occurs.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> BTreeSet<Symbol> {
        self.terms.keys().flat_map(|m| m.powers().iter().map(|&(s, _)| s)).collect()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, s: Symbol) -> u32 {
        self.terms.keys().map(|m| m.degree_in(s)).max().unwrap_or(0)
    }

    fn insert_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(n, a)| (n.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Conjugates coefficients and swaps each symbol with its partner.
    pub fn conj(&self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.conj(), c.conj())).collect() }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conj() == *self
    }

    /// Substitutes symbols by polynomials after validating that the bindings
    /// respect conjugation.
    pub fn substitute(&self, bindings: &Bindings) -> Result<Polynomial> {
        bindings.validate()?;
        Ok(self.substitute_unchecked(bindings))
    }

    pub(crate) fn substitute_unchecked(&self, bindings: &Bindings) -> Polynomial {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Polynomial::constant(c.clone());
            for &(s, e) in m.powers() {
                match bindings.get(s) {
                    Some(v) => factor = &factor * &v.pow(e),
                    None => kept.push((s, e)),
                }
            }
            out = &out + &factor.mul_monomial(&Monomial::from_powers(kept));
        }
        out
    }

    /// Evaluates at a point; `None` if some symbol has no value.
    pub fn eval(&self, point: &HashMap<Symbol, GaussianRational>) -> Option<GaussianRational> {
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(s, e) in m.powers() {
                t = &t * &point.get(&s)?.pow(e);
            }
            acc += &t;
        }
        Some(acc)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Monomial::one() };
        it.fold(first.clone(), |g, m| g.gcd(m))
    }

    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (n, c) in &self.terms {
            terms.insert(n.checked_div(m)?, c.clone());
        }
        Some(Polynomial { terms })
    }

    /// Leading term in printing order (highest total degree, then by names).
    pub fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().min_by(|a, b| a.0.print_key().cmp(&b.0.print_key()))
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
            None => Polynomial::zero(),
        }
    }

    /// Writes `self = a·s + b` when `self` has degree at most one in `s`.
    pub fn split_linear(&self, s: Symbol) -> Option<(Polynomial, Polynomial)> {
        if self.degree_in(s) > 1 {
            return None;
        }
        let mut a = Polynomial::zero();
        let mut b = Polynomial::zero();
        let unit = Monomial::var(s);
        for (m, c) in &self.terms {
            if m.degree_in(s) == 1 {
                a.insert_term(m.checked_div(&unit).unwrap(), c.clone());
            } else {
                b.insert_term(m.clone(), c.clone());
            }
        }
        Some((a, b))
    }

    /// Coefficient vector over a given monomial basis.
    pub fn coefficient_of(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Derivative with respect to `s`.
    pub fn derivative(&self, s: Symbol) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.degree_in(s);
            if e == 0 {
                continue;
            }
            let powers = m.powers().iter().map(|&(t, f)| if t == s { (t, f - 1) } else { (t, f) }).collect();
            out.insert_term(Monomial::from_powers(powers), c * &GaussianRational::from_int(e as i64));
        }
        out
    }
}

impl From<Symbol> for Polynomial {
    fn from(s: Symbol) -> Self {
        Polynomial::var(s)
    }
}

impl From<GaussianRational> for Polynomial {
    fn from(c: GaussianRational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::int(n)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.insert_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Polynomial> for &'a Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut terms: Vec<(&Monomial, &GaussianRational)> = self.terms.iter().collect();
        terms.sort_by_cached_key(|(m, _)| m.print_key());
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let body = if m.is_one() {
                if c.needs_parens() {
                    format!("({c})")
                } else {
                    c.to_string()
                }
            } else if c.is_one() {
                m.to_string()
            } else if (-c).is_one() {
                format!("-{m}")
            } else if c.needs_parens() {
                format!("({c})*{m}")
            } else {
                format!("{c}*{m}")
            };
            if k == 0 {
                f.write_str(&body)?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> Polynomial {
        Polynomial::var(Symbol::real("lambda"))
    }

    #[test]
    fn additive_inverse_cancels() {
        let x = Polynomial::var(Symbol::real("x"));
        let p = &x + &Polynomial::int(1);
        let q = -&p;
        assert!((&p + &q).is_identically_zero());
    }

    #[test]
    fn type_n_generator_and_distributivity() {
        let psi4 = Polynomial::var(Symbol::complex("psi4"));
        let prod = &lam() * &psi4;
        assert_eq!(prod.to_string(), "lambda*psi4");
        let psi2 = Polynomial::var(Symbol::complex("psi2"));
        let phi11 = Polynomial::var(Symbol::real("phi11"));
        let lhs = &(&lam().scale(&2.into()) + &psi2) * &phi11;
        assert_eq!(lhs.to_string(), "2*lambda*phi11 + phi11*psi2");
        assert!(!lhs.is_identically_zero());
    }

    #[test]
    fn conjugation_swaps_partners() {
        assert_eq!(lam().conj(), lam());
        let psi2 = Symbol::complex("psi2");
        assert_eq!(Polynomial::var(psi2).conj().to_string(), "psi2_bar");
        let p = Polynomial::var(psi2).scale(&GaussianRational::complex((1, 1), (2, 1)));
        assert_eq!(p.conj().to_string(), "(1-2*i)*psi2_bar");
    }

    #[test]
    fn substitution_respects_conjugation() {
        let psi2 = Symbol::complex("psi2");
        let lambda = Symbol::real("lambda");
        let p = &lam().scale(&2.into()) + &Polynomial::var(psi2);
        // Λ is real, so it can only be tied to Ψ₂ by fixing Ψ₂ (and its partner).
        let mut b = Bindings::new();
        b.bind_with_conjugate(psi2, lam().scale(&(-2).into()));
        assert!(p.substitute(&b).unwrap().is_identically_zero());

        let mut bad = Bindings::new();
        bad.bind(lambda, Polynomial::var(psi2).scale(&GaussianRational::ratio(-1, 2)));
        assert!(matches!(p.substitute(&bad), Err(Error::ConjugationMismatch(_))));

        // With a real Ψ₂ the direct form is admissible.
        let psi2r = Symbol::real("psi2");
        let q = &lam().scale(&2.into()) + &Polynomial::var(psi2r);
        let mut direct = Bindings::new();
        direct.bind(lambda, Polynomial::var(psi2r).scale(&GaussianRational::ratio(-1, 2)));
        assert!(q.substitute(&direct).unwrap().is_identically_zero());

        let n = &lam() * &Polynomial::var(Symbol::complex("psi4"));
        let mut zero = Bindings::new();
        zero.bind(lambda, Polynomial::zero());
        assert!(n.substitute(&zero).unwrap().is_identically_zero());

        let x = Polynomial::var(Symbol::real("x"));
        assert_eq!(x.substitute(&Bindings::new()).unwrap(), x);
    }

    #[test]
    fn linear_split_and_monomial_content() {
        let psi2 = Polynomial::var(Symbol::complex("psi2"));
        let phi11 = Polynomial::var(Symbol::real("phi11"));
        let p = &(&(&lam().scale(&2.into()) + &psi2) * &phi11) * &psi2;
        let content = p.monomial_content();
        assert_eq!(content.to_string(), "phi11*psi2");
        let reduced = p.div_monomial(&content).unwrap();
        assert_eq!(reduced.to_string(), "2*lambda + psi2");
        let (a, b) = reduced.split_linear(Symbol::real("lambda")).unwrap();
        assert_eq!(a, Polynomial::int(2));
        assert_eq!(b, psi2);
        assert_eq!(reduced.monic().to_string(), "lambda + 1/2*psi2");
    }

    #[test]
    fn derivative_of_power() {
        let z = Symbol::real("z");
        let p = Polynomial::var(z).pow(3);
        assert_eq!(p.derivative(z).to_string(), "3*z^2");
    }
}
