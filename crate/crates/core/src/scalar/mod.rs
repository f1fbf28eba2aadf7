//! Exact scalar layer: Gaussian rationals, interned symbols with conjugate
//! partners, multivariate polynomials and univariate squarefree machinery.

mod gaussian;
mod parse;
mod poly;
mod symbol;
mod univariate;

pub use gaussian::GaussianRational;
pub use num_rational::BigRational;
pub use parse::parse_scalar;
pub use poly::{Bindings, Monomial, Polynomial};
pub use symbol::{Symbol, SymbolKind, CONJ_SUFFIX};
pub use univariate::{squarefree_decomposition, squarefree_uni, SquarefreeDecomposition, UniPoly};

use std::collections::HashMap;

/// Extends an assignment of base symbols to their conjugate partners.
pub fn with_conjugates(point: &HashMap<Symbol, GaussianRational>) -> HashMap<Symbol, GaussianRational> {
    let mut out = point.clone();
    for (&s, v) in point {
        out.entry(s.conj()).or_insert_with(|| v.conj());
    }
    out
}
