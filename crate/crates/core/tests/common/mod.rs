//! Brute-force index-loop evaluation of the condition spinors at exact
//! numeric points. Shares nothing with the library's spinor engine beyond
//! the number type, so it serves as an independent oracle.
#![allow(dead_code)]

use spinorss::GaussianRational as Q;

pub fn q(n: i64) -> Q {
    Q::from_int(n)
}

pub fn eps(a: usize, b: usize) -> Q {
    match (a, b) {
        (0, 1) => q(1),
        (1, 0) => q(-1),
        _ => q(0),
    }
}

/// Every index tuple of length `n`, slot 0 most significant.
pub fn tuples(n: usize) -> Vec<Vec<usize>> {
    (0..1usize << n).map(|code| (0..n).map(|k| (code >> (n - 1 - k)) & 1).collect()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut v = p.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// Average of `f` over all orderings of the given index values.
pub fn sym(values: &[usize], f: impl Fn(&[usize]) -> Q) -> Q {
    let perms = permutations(values.len());
    let mut acc = q(0);
    for p in &perms {
        let v: Vec<usize> = p.iter().map(|&i| values[i]).collect();
        acc += &f(&v);
    }
    &acc * &Q::ratio(1, perms.len() as i64)
}

/// Numeric curvature data: Ψ₀..Ψ₄, Φ_{ab'} and Λ.
#[derive(Clone)]
pub struct Point {
    pub psi: [Q; 5],
    pub phi: [[Q; 3]; 3],
    pub lambda: Q,
}

impl Point {
    pub fn psi4(&self, i: &[usize]) -> Q {
        self.psi[i.iter().sum::<usize>()].clone()
    }

    pub fn x4(&self, a: usize, b: usize, c: usize, d: usize) -> Q {
        let pair = &(&eps(a, c) * &eps(b, d)) + &(&eps(a, d) * &eps(b, c));
        &self.psi4(&[a, b, c, d]) + &(&self.lambda * &pair)
    }

    pub fn phi4(&self, a: usize, b: usize, ap: usize, bp: usize) -> Q {
        self.phi[a + b][ap + bp].clone()
    }

    /// `X_{ABC}{}^G Ψ_{DEFG}` symmetrized over CDEF.
    pub fn weyl_full(&self, i: &[usize]) -> Q {
        let (a, b) = (i[0], i[1]);
        sym(&i[2..6], |v| {
            let mut acc = q(0);
            for g in 0..2 {
                for h in 0..2 {
                    acc += &(&(&eps(g, h) * &self.x4(a, b, v[0], h)) * &self.psi4(&[v[1], v[2], v[3], g]));
                }
            }
            acc
        })
    }

    /// `W_{A}{}^{B}{}_{BDEF}` of the full Weyl condition.
    pub fn weyl_full_bc(&self, a: usize, d: usize, e: usize, f: usize) -> Q {
        let mut acc = q(0);
        for b in 0..2 {
            for h in 0..2 {
                acc += &(&eps(b, h) * &self.weyl_full(&[a, h, b, d, e, f]));
            }
        }
        acc
    }

    /// `Ψ^{GH}{}_{(AD}Ψ_{EF)GH} − 2ΛΨ_{ADEF}`.
    pub fn weyl_contracted(&self, i: &[usize]) -> Q {
        let quad = sym(i, |v| {
            let mut acc = q(0);
            for g in 0..2 {
                for h in 0..2 {
                    for k in 0..2 {
                        for l in 0..2 {
                            let up = &(&eps(g, k) * &eps(h, l)) * &self.psi4(&[k, l, v[0], v[1]]);
                            acc += &(&up * &self.psi4(&[v[2], v[3], g, h]));
                        }
                    }
                }
            }
            acc
        });
        &quad - &(&(&q(2) * &self.lambda) * &self.psi4(i))
    }

    /// `Φ_{A'B'C}{}^G Ψ_{DEFG}` symmetrized over CDEF; index `[C,D,E,F,A',B']`.
    pub fn mixed(&self, i: &[usize]) -> Q {
        let (ap, bp) = (i[4], i[5]);
        sym(&i[0..4], |v| {
            let mut acc = q(0);
            for g in 0..2 {
                for h in 0..2 {
                    acc += &(&(&eps(g, h) * &self.phi4(v[0], h, ap, bp)) * &self.psi4(&[v[1], v[2], v[3], g]));
                }
            }
            acc
        })
    }

    /// `−2X_{AB(C}{}^E Φ_{D)EC'D'} − 2Φ_{AB(C'}{}^{E'} Φ_{D')E'CD}`; index `[A,B,C,D,C',D']`.
    pub fn ricci_full(&self, i: &[usize]) -> Q {
        let (a, b, cp, dp) = (i[0], i[1], i[4], i[5]);
        let first = sym(&i[2..4], |v| {
            let mut acc = q(0);
            for e in 0..2 {
                for h in 0..2 {
                    acc += &(&(&eps(e, h) * &self.x4(a, b, v[0], h)) * &self.phi4(v[1], e, cp, dp));
                }
            }
            acc
        });
        let second = sym(&[cp, dp], |v| {
            let mut acc = q(0);
            for e in 0..2 {
                for h in 0..2 {
                    acc += &(&(&eps(e, h) * &self.phi4(a, b, v[0], h)) * &self.phi4(i[2], i[3], v[1], e));
                }
            }
            acc
        });
        &(&first + &second) * &q(-2)
    }

    /// `Ψ_{(ABC}{}^E Φ_{D)EC'D'}`; index `[A,B,C,D,C',D']`.
    pub fn s1(&self, i: &[usize]) -> Q {
        let (cp, dp) = (i[4], i[5]);
        sym(&i[0..4], |v| {
            let mut acc = q(0);
            for e in 0..2 {
                for h in 0..2 {
                    acc += &(&(&eps(e, h) * &self.psi4(&[v[0], v[1], v[2], h])) * &self.phi4(v[3], e, cp, dp));
                }
            }
            acc
        })
    }
}
