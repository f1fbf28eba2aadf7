//! Exact linear algebra over the Gaussian rationals and fraction-free
//! elimination over polynomial entries.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::scalar::{with_conjugates, GaussianRational, Monomial, Polynomial, Symbol};

/// Deterministic generator used for every sampled check and witness search.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(rng: &mut ChaCha8Rng) -> num_rational::BigRational {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=4);
    num_rational::BigRational::new(num.into(), den.into())
}

/// Random exact value: rational for real symbols, Gaussian rational otherwise.
pub fn random_value(rng: &mut ChaCha8Rng, real: bool) -> GaussianRational {
    let re = small_rational(rng);
    if real {
        GaussianRational::real(re)
    } else {
        GaussianRational::new(re, small_rational(rng))
    }
}

/// Assigns random values to the base symbols (conjugate partners follow).
pub fn random_point(symbols: &BTreeSet<Symbol>, rng: &mut ChaCha8Rng) -> HashMap<Symbol, GaussianRational> {
    let bases: BTreeSet<Symbol> = symbols.iter().map(|s| s.base()).collect();
    let point: HashMap<Symbol, GaussianRational> =
        bases.into_iter().map(|s| (s, random_value(rng, s.is_real()))).collect();
    with_conjugates(&point)
}

/// Draws points until every polynomial in `nonzero` is nonzero there.
pub fn admissible_point(
    symbols: &BTreeSet<Symbol>,
    nonzero: &[Polynomial],
    rng: &mut ChaCha8Rng,
) -> Option<HashMap<Symbol, GaussianRational>> {
    let mut all = symbols.clone();
    for p in nonzero {
        all.extend(p.symbols());
    }
    (0..1000).find_map(|_| {
        let pt = random_point(&all, rng);
        nonzero.iter().all(|p| p.eval(&pt).is_some_and(|v| !v.is_zero())).then_some(pt)
    })
}

/// Row-echelon reduction in place; returns pivot columns.
fn echelon(rows: &mut [Vec<GaussianRational>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].inv().unwrap();
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            let (pivot_row, other) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (o, pv) in other.iter_mut().zip(pivot_row.iter()) {
                if !pv.is_zero() {
                    *o -= &(&f * pv);
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(rows: &[Vec<GaussianRational>]) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m).len()
}

/// Basis of `{x : rows·x = 0}`.
pub fn kernel(rows: &[Vec<GaussianRational>], ncols: usize) -> Vec<Vec<GaussianRational>> {
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![GaussianRational::zero(); ncols];
            v[f] = GaussianRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[r][f];
            }
            v
        })
        .collect()
}

/// Coefficient vectors of `polys` over their joint monomial basis.
pub fn coefficient_rows(polys: &[Polynomial]) -> Vec<Vec<GaussianRational>> {
    let basis: BTreeSet<&Monomial> = polys.iter().flat_map(|p| p.monomials()).collect();
    polys.iter().map(|p| basis.iter().map(|m| p.coefficient_of(m)).collect()).collect()
}

/// Dimension of the span of `polys` as vectors over their monomials.
pub fn span_rank(polys: &[Polynomial]) -> usize {
    let nonzero: Vec<Polynomial> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return 0;
    }
    rank(&coefficient_rows(&nonzero))
}

/// Prime with `p ≡ 1 (mod 4)`, so `i` has an image in `F_p`.
pub const PRIME: u64 = 998_244_353;

fn pow_mod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    b %= PRIME;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % PRIME;
        }
        b = b * b % PRIME;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, PRIME - 2)
}

/// Square root of −1 in `F_p` (3 generates the multiplicative group).
fn sqrt_minus_one() -> u64 {
    pow_mod(3, (PRIME - 1) / 4)
}

fn rational_mod(r: &num_rational::BigRational) -> Option<u64> {
    let p = num_bigint::BigInt::from(PRIME);
    let reduce = |n: &num_bigint::BigInt| -> u64 {
        let m = ((n % &p) + &p) % &p;
        u64::try_from(m).expect("reduced below p")
    };
    let den = reduce(r.denom());
    (den != 0).then(|| reduce(r.numer()) * inv_mod(den) % PRIME)
}

/// Image of a Gaussian rational under `i ↦ √−1`, if its denominators are units.
pub fn gaussian_mod(q: &GaussianRational) -> Option<u64> {
    let re = rational_mod(&q.re)?;
    let im = rational_mod(&q.im)?;
    Some((re + im * sqrt_minus_one()) % PRIME)
}

fn eval_mod(p: &Polynomial, point: &HashMap<Symbol, u64>) -> u64 {
    let mut acc = 0u64;
    for (m, c) in p.terms() {
        let mut t = gaussian_mod(c).expect("coefficient denominators are units mod p");
        for &(s, e) in m.powers() {
            t = t * pow_mod(point[&s], e as u64) % PRIME;
        }
        acc = (acc + t) % PRIME;
    }
    acc
}

/// Rank over `F_p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][col]);
        for v in rows[r].iter_mut() {
            *v = *v * inv % PRIME;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (o, pv) in row.iter_mut().zip(&pivot_row) {
                *o = (*o + PRIME - f * pv % PRIME) % PRIME;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

/// Independent route to [`span_rank`]: rank over `F_p` of the matrix of
/// values at random points, every symbol (conjugate partners included)
/// drawn independently. Reduction mod p never raises a rank, so agreement
/// with the exact span rank certifies it.
pub fn evaluation_rank(polys: &[Polynomial], seed: u64) -> usize {
    let nonzero: Vec<&Polynomial> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return 0;
    }
    let symbols: BTreeSet<Symbol> = nonzero.iter().flat_map(|p| p.symbols()).collect();
    let monomials: BTreeSet<&Monomial> = nonzero.iter().flat_map(|p| p.monomials()).collect();
    let npoints = monomials.len().min(nonzero.len()) + 4;
    let mut rng = seeded_rng(seed);
    let points: Vec<HashMap<Symbol, u64>> =
        (0..npoints).map(|_| symbols.iter().map(|&s| (s, rng.gen_range(1..PRIME))).collect()).collect();
    let rows: Vec<Vec<u64>> = nonzero.iter().map(|p| points.iter().map(|pt| eval_mod(p, pt)).collect()).collect();
    rank_mod_p(rows)
}

/// Result of eliminating a polynomial matrix over its field of fractions.
#[derive(Clone, Debug)]
pub struct SymbolicElimination {
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
    /// Pivots used; the result holds wherever none of them vanishes.
    pub pivots: Vec<Polynomial>,
    /// Kernel basis with polynomial entries, one vector per free column.
    pub kernel: Vec<Vec<Polynomial>>,
}

fn strip_content(row: &mut [Polynomial]) {
    let mut it = row.iter().filter(|p| !p.is_zero());
    let Some(first) = it.next() else { return };
    let g = it.fold(first.monomial_content(), |g, p| g.gcd(&p.monomial_content()));
    if !g.is_one() {
        for p in row.iter_mut() {
            *p = p.div_monomial(&g).expect("content divides");
        }
    }
}

/// Fraction-free Gauss–Jordan elimination. Among candidate pivots in a
/// column, those for which `preferred` returns true are taken first
/// (typically entries known to be nonzero), then the smallest entry.
pub fn eliminate_symbolic(
    matrix: &[Vec<Polynomial>],
    ncols: usize,
    preferred: impl Fn(&Polynomial) -> bool,
) -> SymbolicElimination {
    let mut m: Vec<Vec<Polynomial>> = matrix.to_vec();
    for row in &mut m {
        strip_content(row);
    }
    let mut pivot_columns = Vec::new();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let candidates: Vec<usize> = (r..m.len()).filter(|&i| !m[i][col].is_zero()).collect();
        let Some(&p) = candidates
            .iter()
            .min_by_key(|&&i| (!preferred(&m[i][col]), m[i][col].len(), m[i][col].total_degree()))
        else {
            continue;
        };
        m.swap(r, p);
        let pv = m[r][col].clone();
        for i in 0..m.len() {
            if i == r || m[i][col].is_zero() {
                continue;
            }
            let f = m[i][col].clone();
            let new_row: Vec<Polynomial> =
                m[i].iter().zip(&m[r]).map(|(a, b)| &(a * &pv) - &(b * &f)).collect();
            m[i] = new_row;
            strip_content(&mut m[i]);
        }
        pivot_columns.push(col);
        pivots.push(pv);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_columns.contains(c)).collect();
    // later steps rescale earlier pivot rows, so read the final diagonal
    let diag: Vec<Polynomial> = pivot_columns.iter().enumerate().map(|(i, &c)| m[i][c].clone()).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            // x_f = Π d_j,  x_{c_i} = −a_{i,f} Π_{j≠i} d_j
            let mut v = vec![Polynomial::zero(); ncols];
            v[f] = diag.iter().fold(Polynomial::one(), |acc, p| &acc * p);
            for (i, &c) in pivot_columns.iter().enumerate() {
                if m[i][f].is_zero() {
                    continue;
                }
                let others = diag
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(Polynomial::one(), |acc, (_, p)| &acc * p);
                v[c] = -(&m[i][f] * &others);
            }
            strip_content(&mut v);
            v
        })
        .collect();
    SymbolicElimination { rank: pivots.len(), pivot_columns, pivots, kernel }
}

/// Evaluates a polynomial matrix at a point.
pub fn instantiate(matrix: &[Vec<Polynomial>], point: &HashMap<Symbol, GaussianRational>) -> Vec<Vec<GaussianRational>> {
    matrix.iter().map(|row| row.iter().map(|p| p.eval(point).expect("point covers all symbols")).collect()).collect()
}

/// Groups polynomials by their monomial-free linear structure: returns the
/// coefficient of each unknown in each linear form.
pub fn linear_coefficients(forms: &[Polynomial], unknowns: &[Symbol]) -> Vec<Vec<Polynomial>> {
    forms
        .iter()
        .map(|f| {
            let mut row = vec![Polynomial::zero(); unknowns.len()];
            for (m, c) in f.terms() {
                let hit = unknowns.iter().position(|&u| m.degree_in(u) == 1);
                let Some(k) = hit else {
                    panic!("form {f} is not linear homogeneous in the unknowns");
                };
                let rest = m.checked_div(&Monomial::var(unknowns[k])).unwrap();
                row[k] = &row[k] + &Polynomial::term(c.clone(), rest);
            }
            row
        })
        .collect()
}

/// Keeps the first occurrence of each distinct entry.
pub fn dedup<T: PartialEq + Clone>(items: &[T]) -> Vec<T> {
    let mut out: Vec<T> = Vec::new();
    for it in items {
        if !out.contains(it) {
            out.push(it.clone());
        }
    }
    out
}

/// Sorted map of symbol names to values, for reporting.
pub fn named_point(point: &HashMap<Symbol, GaussianRational>) -> BTreeMap<String, GaussianRational> {
    point.iter().filter(|(s, _)| !s.is_barred()).map(|(s, v)| (s.name(), v.clone())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn rank_and_kernel() {
        let rows = vec![vec![g(1), g(2), g(3)], vec![g(2), g(4), g(6)], vec![g(0), g(1), g(1)]];
        assert_eq!(rank(&rows), 2);
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 1);
        for row in &rows {
            let dot = row.iter().zip(&k[0]).fold(GaussianRational::zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn modular_image_respects_i_squared() {
        let i = gaussian_mod(&GaussianRational::i()).unwrap();
        assert_eq!(i * i % PRIME, PRIME - 1);
        let half = gaussian_mod(&GaussianRational::ratio(1, 2)).unwrap();
        assert_eq!(half * 2 % PRIME, 1);
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]]), 1);
    }

    #[test]
    fn span_rank_matches_evaluation_rank() {
        let x = Polynomial::var(Symbol::real("la_x"));
        let y = Polynomial::var(Symbol::complex("la_y"));
        let polys = vec![&x * &y, &(&x * &y) + &x, x.clone(), &y * &y, Polynomial::zero()];
        assert_eq!(span_rank(&polys), 3);
        assert_eq!(evaluation_rank(&polys, 7), 3);
    }

    #[test]
    fn symbolic_kernel_of_generic_matrix() {
        let a = Polynomial::var(Symbol::complex("la_a"));
        let b = Polynomial::var(Symbol::complex("la_b"));
        // [a b 0; 0 a b]: kernel spanned by (b², −ab, a²)
        let z = Polynomial::zero;
        let m = vec![vec![a.clone(), b.clone(), z()], vec![z(), a.clone(), b.clone()]];
        let e = eliminate_symbolic(&m, 3, |_| false);
        assert_eq!(e.rank, 2);
        assert_eq!(e.kernel.len(), 1);
        for row in &m {
            let dot = row.iter().zip(&e.kernel[0]).fold(Polynomial::zero(), |acc, (p, q)| &acc + &(p * q));
            assert!(dot.is_zero());
        }
    }
}
