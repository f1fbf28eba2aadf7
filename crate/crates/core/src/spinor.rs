//! Dense spinors over polynomial scalars.
//!
//! A spinor with `n` slots stores `2^n` components. The component for index
//! values `(i₀, …, iₙ₋₁)` lives at flat position `Σ iₖ·2^(n−1−k)`, so slot 0 is
//! the most significant bit and `Psi[0011]` reads left to right.
//!
//! Conventions: `ε₀₁ = ε^{01} = +1`. Raising and lowering follow the see-saw
//! rule `κ^A = ε^{AB} κ_B`, `κ_B = κ^A ε_{AB}`. [`Spinor::contract`] sums an
//! upper slot against a lower slot directly; with see-saw raising this gives
//! `κ^A τ_A = −κ_A τ^A`, so which slot was raised fixes the sign.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Primedness {
    Unprimed,
    Primed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variance {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IndexSlot {
    pub primedness: Primedness,
    pub variance: Variance,
}

impl IndexSlot {
    pub const LOWER: IndexSlot = IndexSlot { primedness: Primedness::Unprimed, variance: Variance::Lower };
    pub const UPPER: IndexSlot = IndexSlot { primedness: Primedness::Unprimed, variance: Variance::Upper };
    pub const LOWER_PRIMED: IndexSlot = IndexSlot { primedness: Primedness::Primed, variance: Variance::Lower };
    pub const UPPER_PRIMED: IndexSlot = IndexSlot { primedness: Primedness::Primed, variance: Variance::Upper };

    /// Complex conjugation flips primedness and keeps variance.
    pub fn conj(self) -> IndexSlot {
        let primedness = match self.primedness {
            Primedness::Unprimed => Primedness::Primed,
            Primedness::Primed => Primedness::Unprimed,
        };
        IndexSlot { primedness, variance: self.variance }
    }
}

/// A 2×2 matrix acting on one spinor slot, `m[row][col]`.
pub type SlotMatrix = [[GaussianRational; 2]; 2];

#[derive(Clone, PartialEq, Eq)]
pub struct Spinor {
    slots: Vec<IndexSlot>,
    comps: Vec<Polynomial>,
}

#[inline]
fn bit(flat: usize, n: usize, k: usize) -> usize {
    (flat >> (n - 1 - k)) & 1
}

#[inline]
fn with_bit(flat: usize, n: usize, k: usize, v: usize) -> usize {
    let mask = 1 << (n - 1 - k);
    (flat & !mask) | (v << (n - 1 - k))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

impl Spinor {
    pub fn zeros(slots: Vec<IndexSlot>) -> Spinor {
        let n = 1 << slots.len();
        Spinor { slots, comps: vec![Polynomial::zero(); n] }
    }

    /// Builds a spinor from a function of the index tuple.
    pub fn from_fn(slots: Vec<IndexSlot>, mut f: impl FnMut(&[usize]) -> Polynomial) -> Spinor {
        let n = slots.len();
        let mut idx = vec![0usize; n];
        let comps = (0..1usize << n)
            .map(|flat| {
                for (k, v) in idx.iter_mut().enumerate() {
                    *v = bit(flat, n, k);
                }
                f(&idx)
            })
            .collect();
        Spinor { slots, comps }
    }

    /// A 0-slot spinor.
    pub fn scalar(p: Polynomial) -> Spinor {
        Spinor { slots: Vec::new(), comps: vec![p] }
    }

    /// `ε_AB` with two lower unprimed slots.
    pub fn epsilon() -> Spinor {
        Spinor::from_fn(vec![IndexSlot::LOWER; 2], |i| match (i[0], i[1]) {
            (0, 1) => Polynomial::int(1),
            (1, 0) => Polynomial::int(-1),
            _ => Polynomial::zero(),
        })
    }

    /// `ε^{AB}`; numerically the same entries as `ε_AB`.
    pub fn epsilon_upper() -> Spinor {
        let mut e = Spinor::epsilon();
        e.slots = vec![IndexSlot::UPPER; 2];
        e
    }

    pub fn slots(&self) -> &[IndexSlot] {
        &self.slots
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.comps
    }

    fn flat(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.slots.len(), "index length must match slot count");
        idx.iter().fold(0, |acc, &v| (acc << 1) | (v & 1))
    }

    pub fn get(&self, idx: &[usize]) -> &Polynomial {
        &self.comps[self.flat(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: Polynomial) {
        let f = self.flat(idx);
        self.comps[f] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Polynomial::is_zero)
    }

    fn check_slot(&self, k: usize) -> Result<()> {
        if k >= self.slots.len() {
            return Err(Error::SlotOutOfRange(k));
        }
        Ok(())
    }

    fn same_signature(&self, other: &Spinor) -> Result<()> {
        if self.slots != other.slots {
            return Err(Error::SignatureMismatch(format!("{:?} vs {:?}", self.slots, other.slots)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Spinor) -> Result<Spinor> {
        self.same_signature(other)?;
        Ok(Spinor {
            slots: self.slots.clone(),
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Spinor) -> Result<Spinor> {
        self.same_signature(other)?;
        Ok(Spinor {
            slots: self.slots.clone(),
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &GaussianRational) -> Spinor {
        Spinor { slots: self.slots.clone(), comps: self.comps.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn scale_poly(&self, c: &Polynomial) -> Spinor {
        Spinor { slots: self.slots.clone(), comps: self.comps.iter().map(|p| p * c).collect() }
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Spinor {
        Spinor { slots: self.slots.clone(), comps: self.comps.iter().map(f).collect() }
    }

    /// Tensor product; slots of `self` come first.
    pub fn outer(&self, other: &Spinor) -> Spinor {
        let nb = other.slots.len();
        let mut comps = Vec::with_capacity(self.comps.len() * other.comps.len());
        for a in &self.comps {
            for b in &other.comps {
                comps.push(if a.is_zero() || b.is_zero() { Polynomial::zero() } else { a * b });
            }
        }
        let mut slots = self.slots.clone();
        slots.extend_from_slice(&other.slots);
        debug_assert_eq!(comps.len(), 1 << (self.slots.len() + nb));
        Spinor { slots, comps }
    }

    /// `κ^A = ε^{AB} κ_B` on slot `k`.
    pub fn raise(&self, k: usize) -> Result<Spinor> {
        self.check_slot(k)?;
        if self.slots[k].variance != Variance::Lower {
            return Err(Error::VarianceMismatch(format!("raise needs a lower slot at {k}")));
        }
        let n = self.slots.len();
        let mut out = self.clone();
        out.slots[k].variance = Variance::Upper;
        for f in 0..self.comps.len() {
            out.comps[f] = if bit(f, n, k) == 0 {
                self.comps[with_bit(f, n, k, 1)].clone()
            } else {
                -&self.comps[with_bit(f, n, k, 0)]
            };
        }
        Ok(out)
    }

    /// `κ_B = κ^A ε_{AB}` on slot `k`.
    pub fn lower(&self, k: usize) -> Result<Spinor> {
        self.check_slot(k)?;
        if self.slots[k].variance != Variance::Upper {
            return Err(Error::VarianceMismatch(format!("lower needs an upper slot at {k}")));
        }
        let n = self.slots.len();
        let mut out = self.clone();
        out.slots[k].variance = Variance::Lower;
        for f in 0..self.comps.len() {
            out.comps[f] = if bit(f, n, k) == 0 {
                -&self.comps[with_bit(f, n, k, 1)]
            } else {
                self.comps[with_bit(f, n, k, 0)].clone()
            };
        }
        Ok(out)
    }

    /// Sums slot `i` against slot `j`; they must share primedness and have
    /// opposite variance.
    pub fn contract(&self, i: usize, j: usize) -> Result<Spinor> {
        self.check_slot(i)?;
        self.check_slot(j)?;
        if i == j {
            return Err(Error::VarianceMismatch(format!("cannot contract slot {i} with itself")));
        }
        let (a, b) = (self.slots[i], self.slots[j]);
        if a.primedness != b.primedness {
            return Err(Error::PrimednessMismatch(format!("slots {i} and {j}")));
        }
        if a.variance == b.variance {
            return Err(Error::VarianceMismatch(format!("slots {i} and {j} have equal variance")));
        }
        let n = self.slots.len();
        let slots: Vec<IndexSlot> =
            self.slots.iter().enumerate().filter(|&(k, _)| k != i && k != j).map(|(_, s)| *s).collect();
        let mut out = Spinor::zeros(slots);
        let keep: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
        for (f, c) in self.comps.iter().enumerate() {
            if c.is_zero() || bit(f, n, i) != bit(f, n, j) {
                continue;
            }
            let g = keep.iter().fold(0, |acc, &k| (acc << 1) | bit(f, n, k));
            out.comps[g] = &out.comps[g] + c;
        }
        Ok(out)
    }

    /// Contracts several disjoint pairs given in the current slot numbering.
    pub fn contract_pairs(&self, pairs: &[(usize, usize)]) -> Result<Spinor> {
        let mut live: Vec<usize> = (0..self.slots.len()).collect();
        let mut out = self.clone();
        for &(i, j) in pairs {
            let pi = live.iter().position(|&x| x == i).ok_or(Error::SlotOutOfRange(i))?;
            let pj = live.iter().position(|&x| x == j).ok_or(Error::SlotOutOfRange(j))?;
            out = out.contract(pi, pj)?;
            live.retain(|&x| x != i && x != j);
        }
        Ok(out)
    }

    /// Reorders slots: slot `k` of the result is slot `order[k]` of `self`.
    pub fn permute(&self, order: &[usize]) -> Result<Spinor> {
        let n = self.slots.len();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(Error::SignatureMismatch(format!("permutation of length {} for {n} slots", order.len())));
        }
        for &o in order {
            if o >= n || seen[o] {
                return Err(Error::SlotOutOfRange(o));
            }
            seen[o] = true;
        }
        let slots = order.iter().map(|&o| self.slots[o]).collect();
        let mut out = Spinor::zeros(slots);
        for (g, c) in out.comps.iter_mut().enumerate() {
            let mut f = 0;
            for (k, &o) in order.iter().enumerate() {
                f = with_bit(f, n, o, bit(g, n, k));
            }
            *c = self.comps[f].clone();
        }
        Ok(out)
    }

    /// Average over all permutations of the listed slots.
    pub fn symmetrize(&self, subset: &[usize]) -> Result<Spinor> {
        for &k in subset {
            self.check_slot(k)?;
        }
        if let Some(&first) = subset.first() {
            if subset.iter().any(|&k| self.slots[k] != self.slots[first]) {
                return Err(Error::MixedSlots);
            }
        }
        let n = self.slots.len();
        let perms = permutations(subset.len());
        let weight = GaussianRational::ratio(1, perms.len() as i64);
        let mut out = Spinor::zeros(self.slots.clone());
        for (f, slot) in out.comps.iter_mut().enumerate() {
            let mut acc = Polynomial::zero();
            for p in &perms {
                let mut g = f;
                for (k, &pk) in p.iter().enumerate() {
                    g = with_bit(g, n, subset[k], bit(f, n, subset[pk]));
                }
                acc = &acc + &self.comps[g];
            }
            *slot = acc.scale(&weight);
        }
        Ok(out)
    }

    /// Complex conjugate: every slot flips primedness, every component is
    /// conjugated, and slots are reordered so unprimed slots precede primed
    /// ones (each block keeping its relative order). This is an involution on
    /// spinors already in that canonical order.
    pub fn conj(&self) -> Spinor {
        let flipped = Spinor {
            slots: self.slots.iter().map(|s| s.conj()).collect(),
            comps: self.comps.iter().map(Polynomial::conj).collect(),
        };
        flipped.canonical().expect("valid permutation")
    }

    /// Reorders slots into unprimed-then-primed blocks.
    pub fn canonical(&self) -> Result<Spinor> {
        let mut order: Vec<usize> =
            (0..self.slots.len()).filter(|&k| self.slots[k].primedness == Primedness::Unprimed).collect();
        order.extend((0..self.slots.len()).filter(|&k| self.slots[k].primedness == Primedness::Primed));
        self.permute(&order)
    }

    /// Applies `m` to slot `k`: lower slots as `Σ_E m[A][E] T_E`, upper slots
    /// with the inverse transpose (requires `det m = 1`).
    pub fn transform_slot(&self, k: usize, m: &SlotMatrix) -> Result<Spinor> {
        self.check_slot(k)?;
        let n = self.slots.len();
        let mat: SlotMatrix = match self.slots[k].variance {
            Variance::Lower => m.clone(),
            // (m⁻¹)ᵀ for a unimodular m
            Variance::Upper => [[m[1][1].clone(), -&m[1][0]], [-&m[0][1], m[0][0].clone()]],
        };
        let mut out = Spinor::zeros(self.slots.clone());
        for (f, c) in out.comps.iter_mut().enumerate() {
            let a = bit(f, n, k);
            let mut acc = Polynomial::zero();
            for (e, coeff) in mat[a].iter().enumerate() {
                if !coeff.is_zero() {
                    acc = &acc + &self.comps[with_bit(f, n, k, e)].scale(coeff);
                }
            }
            *c = acc;
        }
        Ok(out)
    }

    /// Transforms every slot: unprimed by `m`, primed by the entrywise conjugate.
    pub fn transform(&self, m: &SlotMatrix) -> Result<Spinor> {
        let mbar: SlotMatrix =
            [[m[0][0].conj(), m[0][1].conj()], [m[1][0].conj(), m[1][1].conj()]];
        let mut out = self.clone();
        for k in 0..self.slots.len() {
            let mk = if self.slots[k].primedness == Primedness::Unprimed { m } else { &mbar };
            out = out.transform_slot(k, mk)?;
        }
        Ok(out)
    }

    /// Index tuples and values of the nonzero components.
    pub fn nonzero(&self) -> Vec<(String, &Polynomial)> {
        let n = self.slots.len();
        self.comps
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(f, c)| ((0..n).map(|k| char::from(b'0' + bit(f, n, k) as u8)).collect(), c))
            .collect()
    }

    /// Debug listing like `Psi[0011] = psi2`.
    pub fn describe(&self, name: &str) -> String {
        let rows: Vec<String> = self.nonzero().into_iter().map(|(i, c)| format!("{name}[{i}] = {c}")).collect();
        if rows.is_empty() {
            format!("{name} = 0")
        } else {
            rows.join("\n")
        }
    }
}

impl fmt::Debug for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Spinor {:?}", self.slots)?;
        f.write_str(&self.describe("S"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Symbol;

    fn kappa(a: &str, b: &str) -> Spinor {
        let (a, b) = (Polynomial::var(Symbol::complex(a)), Polynomial::var(Symbol::complex(b)));
        Spinor::from_fn(vec![IndexSlot::LOWER], |i| if i[0] == 0 { a.clone() } else { b.clone() })
    }

    #[test]
    fn epsilon_conventions() {
        // ε^{AB} ε_{CB} = δ^A_C
        let d = Spinor::epsilon_upper().outer(&Spinor::epsilon()).contract(1, 3).unwrap();
        assert_eq!(d.get(&[0, 0]), &Polynomial::int(1));
        assert_eq!(d.get(&[1, 1]), &Polynomial::int(1));
        assert!(d.get(&[0, 1]).is_zero() && d.get(&[1, 0]).is_zero());
        // ε^{AB} ε_{AB} = 2
        let t = Spinor::epsilon_upper().outer(&Spinor::epsilon()).contract_pairs(&[(0, 2), (1, 3)]).unwrap();
        assert_eq!(t.get(&[]), &Polynomial::int(2));
        // the upper ε is the raised lower ε
        let raised = Spinor::epsilon().raise(0).unwrap().raise(1).unwrap();
        assert_eq!(raised, Spinor::epsilon_upper());
        let c = Spinor::epsilon().conj();
        assert_eq!(c.slots(), &[IndexSlot::LOWER_PRIMED; 2]);
        assert_eq!(c.components(), Spinor::epsilon().components());
        assert_eq!(Spinor::epsilon().outer(&Spinor::epsilon()).nonzero().len(), 4);
    }

    #[test]
    fn see_saw_raising() {
        let k = kappa("ka", "kb");
        let up = k.raise(0).unwrap();
        assert_eq!(up.get(&[0]).to_string(), "kb");
        assert_eq!(up.get(&[1]).to_string(), "-ka");
        assert_eq!(up.lower(0).unwrap(), k);
        // κ^A κ_A = 0
        assert!(up.outer(&k).contract(0, 1).unwrap().is_zero());
        assert!(matches!(up.raise(0), Err(Error::VarianceMismatch(_))));
        assert!(matches!(k.lower(0), Err(Error::VarianceMismatch(_))));
    }

    #[test]
    fn contraction_errors() {
        let s = kappa("ka", "kb").outer(&kappa("ka", "kb"));
        assert!(matches!(s.contract(0, 1), Err(Error::VarianceMismatch(_))));
        let mixed = kappa("ka", "kb").raise(0).unwrap().outer(&kappa("ka", "kb").conj());
        assert!(matches!(mixed.contract(0, 1), Err(Error::PrimednessMismatch(_))));
    }

    #[test]
    fn symmetrize_basics() {
        assert!(Spinor::epsilon().symmetrize(&[0, 1]).unwrap().is_zero());
        let s = kappa("ka", "kb").outer(&kappa("la", "lb")).symmetrize(&[0, 1]).unwrap();
        assert_eq!(s.symmetrize(&[0, 1]).unwrap(), s);
        let mixed = kappa("ka", "kb").raise(0).unwrap().outer(&kappa("ka", "kb"));
        assert!(matches!(mixed.symmetrize(&[0, 1]), Err(Error::MixedSlots)));
    }

    #[test]
    fn add_scale_and_signature() {
        let s = kappa("ka", "kb");
        assert!(s.add(&s.scale(&GaussianRational::from_int(-1))).unwrap().is_zero());
        assert!(matches!(s.add(&s.raise(0).unwrap()), Err(Error::SignatureMismatch(_))));
    }

    #[test]
    fn permute_moves_components() {
        let s = kappa("ka", "kb").outer(&kappa("la", "lb"));
        let p = s.permute(&[1, 0]).unwrap();
        assert_eq!(p.get(&[0, 1]), s.get(&[1, 0]));
        assert!(s.permute(&[0, 0]).is_err());
    }

    #[test]
    fn describe_prints_index_tuples() {
        let psi2 = Polynomial::var(Symbol::complex("psi2"));
        let mut s = Spinor::zeros(vec![IndexSlot::LOWER; 4]);
        s.set(&[0, 0, 1, 1], psi2);
        assert_eq!(s.describe("Psi"), "Psi[0011] = psi2");
    }
}
