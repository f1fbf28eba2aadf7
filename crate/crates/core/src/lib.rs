//! Exact 2-spinor algebra and a pointwise classifier for conformal, Ricci
//! and full semi-symmetry of spacetime curvature.
//!
//! All arithmetic is over Gaussian rationals with polynomial coefficients in
//! named symbols, so every identity and verdict is decided exactly.

pub mod classify;
pub mod cli;
pub mod conditions;
pub mod curvature;
pub mod error;
pub mod linalg;
pub mod scalar;
pub mod spinor;

pub use classify::{classify_case, petrov_type, phi_kernel, reproduce_table, segre_pattern, PetrovType};
pub use conditions::{predicates, Verdict};
pub use curvature::{CurvatureSet, RicciSpinor, SegrePattern, WeylSpinor};
pub use error::{Error, Result};
pub use scalar::{GaussianRational, Polynomial, Symbol, SymbolKind};
pub use spinor::Spinor;
