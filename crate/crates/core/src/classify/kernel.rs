//! Solving the linear-in-Φ conditions for a fixed Weyl spinor.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PetrovType;
use crate::conditions::{cond_ricci_s2, cond_weyl_contracted, mixed_from_parts, residual_generators, s1_with};
use crate::curvature::{names, standard_weyl, CurvatureSet, RicciSpinor, WeylSpinor};
use crate::error::{Error, Result};
use crate::linalg::{self, admissible_point, eliminate_symbolic, instantiate, linear_coefficients, seeded_rng};
use crate::scalar::{Bindings, Polynomial, Symbol};
use crate::spinor::{IndexSlot, Spinor};

/// Which linear system in Φ is solved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelSystem {
    /// `Ψ_{(ABC}{}^E Φ_{D)EC'D'} = 0`
    S1,
    /// `Φ_{A'B'(C}{}^G Ψ_{DEF)G} = 0`
    Mixed,
    Both,
}

impl fmt::Display for KernelSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KernelSystem::S1 => "S1",
            KernelSystem::Mixed => "mixed",
            KernelSystem::Both => "both",
        })
    }
}

impl FromStr for KernelSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "s1" => Ok(KernelSystem::S1),
            "mixed" | "mixed5" => Ok(KernelSystem::Mixed),
            "both" => Ok(KernelSystem::Both),
            _ => Err(Error::Parse(format!("unknown system `{s}`, expected S1, mixed or both"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct KernelReport {
    pub which: KernelSystem,
    /// Complex dimension, equal to the real dimension of Hermitian solutions.
    pub dimension: usize,
    /// Kernel directions, `Phi11'` style when they are coordinate axes.
    pub basis: Vec<String>,
    /// Coordinate entries `(a, b)` spanning the kernel, when it is spanned by axes.
    pub coordinates: Option<Vec<(usize, usize)>>,
    pub symbolic_rank: usize,
    /// Ranks at random admissible exact points.
    pub sampled_ranks: Vec<usize>,
    /// Remaining conditions with Φ restricted to the kernel: the contracted
    /// Ricci condition for `S1`, the contracted Weyl condition for `Mixed`.
    pub conditions_on_kernel: Vec<Polynomial>,
}

impl fmt::Display for KernelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "system:     {}", self.which)?;
        writeln!(f, "dimension:  {}", self.dimension)?;
        writeln!(f, "basis:      {}", if self.basis.is_empty() { "(none)".into() } else { self.basis.join(", ") })?;
        let sampled: Vec<String> = self.sampled_ranks.iter().map(|r| r.to_string()).collect();
        writeln!(f, "rank:       {} (sampled {})", self.symbolic_rank, sampled.join(", "))?;
        if self.conditions_on_kernel.is_empty() {
            writeln!(f, "conditions: none")
        } else {
            for c in &self.conditions_on_kernel {
                writeln!(f, "condition:  {c} = 0")?;
            }
            Ok(())
        }
    }
}

pub const KERNEL_SEEDS: [u64; 3] = [101, 202, 303];

fn unknown(a: usize, b: usize) -> Symbol {
    Symbol::complex(&format!("unknown{a}{b}"))
}

fn phi_unknowns() -> Spinor {
    Spinor::from_fn(
        vec![IndexSlot::LOWER, IndexSlot::LOWER, IndexSlot::LOWER_PRIMED, IndexSlot::LOWER_PRIMED],
        |i| Polynomial::var(unknown(i[0] + i[1], i[2] + i[3])),
    )
}

fn is_preferred(p: &Polynomial, nonzero_syms: &BTreeSet<Symbol>, nonzero: &[Polynomial]) -> bool {
    if p.len() == 1 {
        return p.symbols().iter().all(|s| nonzero_syms.contains(s));
    }
    let m = p.monic();
    nonzero.iter().any(|q| q.monic() == m)
}

/// Kernel of the chosen system over the field generated by Ψ's symbols,
/// restricted to Hermitian Φ. Pivots are preferred among entries known to
/// be nonzero, and the symbolic rank is checked at sampled points.
pub fn phi_kernel(w: &WeylSpinor, nonzero: &[Polynomial], which: KernelSystem) -> Result<KernelReport> {
    let psi = w.to_spinor();
    let phi = phi_unknowns();
    let mut forms: Vec<Polynomial> = Vec::new();
    if matches!(which, KernelSystem::S1 | KernelSystem::Both) {
        forms.extend(s1_with(&psi, &phi).components().iter().cloned());
    }
    if matches!(which, KernelSystem::Mixed | KernelSystem::Both) {
        forms.extend(mixed_from_parts(&psi, &phi).components().iter().cloned());
    }
    // Hermitian Φ: the conjugate equations act on the transposed unknowns
    let mut transpose = Bindings::new();
    for a in 0..3 {
        for b in 0..3 {
            transpose.bind(unknown(a, b).conj(), Polynomial::var(unknown(b, a)));
        }
    }
    let conjugates: Vec<Polynomial> = forms.iter().map(|f| f.conj().substitute_unchecked(&transpose)).collect();
    forms.extend(conjugates);
    let forms: Vec<Polynomial> = linalg::dedup(&forms).into_iter().filter(|f| !f.is_zero()).collect();

    let unknowns: Vec<Symbol> = (0..9).map(|k| unknown(k / 3, k % 3)).collect();
    let matrix = linalg::dedup(&linear_coefficients(&forms, &unknowns));

    let nonzero_syms: BTreeSet<Symbol> =
        nonzero.iter().filter(|p| p.len() == 1).flat_map(|p| p.symbols()).flat_map(|s| [s, s.conj()]).collect();
    let elim = eliminate_symbolic(&matrix, 9, |p| is_preferred(p, &nonzero_syms, nonzero));

    let symbols: BTreeSet<Symbol> = matrix.iter().flatten().flat_map(|p| p.symbols()).collect();
    let mut sampled_ranks = Vec::new();
    for seed in KERNEL_SEEDS {
        let mut rng = seeded_rng(seed);
        let pt = admissible_point(&symbols, nonzero, &mut rng).ok_or_else(|| Error::NoAdmissibleInstance(format!("{} assumptions", nonzero.len())))?;
        let r = linalg::rank(&instantiate(&matrix, &pt));
        if r != elim.rank {
            return Err(Error::InconsistentInstantiationRank { symbolic: elim.rank, sampled: r });
        }
        sampled_ranks.push(r);
    }

    let axes: Option<Vec<(usize, usize)>> = elim
        .kernel
        .iter()
        .map(|v| {
            let hits: Vec<usize> = (0..9).filter(|&k| !v[k].is_zero()).collect();
            (hits.len() == 1).then(|| (hits[0] / 3, hits[0] % 3))
        })
        .collect();
    let coordinates = axes.filter(|ax| ax.iter().all(|&(a, b)| ax.contains(&(b, a))));
    let basis = match &coordinates {
        Some(ax) => ax.iter().map(|(a, b)| format!("Phi{a}{b}'")).collect(),
        None => elim
            .kernel
            .iter()
            .map(|v| {
                let parts: Vec<String> = v.iter().map(|p| p.to_string()).collect();
                format!("({})", parts.join(", "))
            })
            .collect(),
    };

    let conditions_on_kernel = match &coordinates {
        Some(ax) => kernel_conditions(w, nonzero, ax, which)?,
        None => Vec::new(),
    };

    Ok(KernelReport {
        which,
        dimension: elim.kernel.len(),
        basis,
        coordinates,
        symbolic_rank: elim.rank,
        sampled_ranks,
        conditions_on_kernel,
    })
}

/// Conditions left once Φ is parametrized by the standard symbols on the
/// kernel axes. Kernel coordinates are kept in the generators.
fn kernel_conditions(
    w: &WeylSpinor,
    nonzero: &[Polynomial],
    axes: &[(usize, usize)],
    which: KernelSystem,
) -> Result<Vec<Polynomial>> {
    let phi: [[Polynomial; 3]; 3] = std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            if axes.contains(&(a, b)) {
                Polynomial::var(names::phi(a, b))
            } else {
                Polynomial::zero()
            }
        })
    });
    let c = CurvatureSet::new(w.clone(), RicciSpinor::new(phi)?, Polynomial::var(names::lambda()))?;
    let mut comps = Vec::new();
    if matches!(which, KernelSystem::S1 | KernelSystem::Both) {
        comps.extend(cond_ricci_s2(&c).components);
    }
    if matches!(which, KernelSystem::Mixed | KernelSystem::Both) {
        comps.extend(cond_weyl_contracted(&c).components);
    }
    Ok(residual_generators(&comps, nonzero))
}

/// Kernel for the standard form of a Petrov type.
pub fn standard_kernel(t: PetrovType, which: KernelSystem) -> Result<KernelReport> {
    let sw = standard_weyl(t);
    phi_kernel(&sw.weyl, &sw.nonzero, which)
}
