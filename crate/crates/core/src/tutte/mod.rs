//! Exact Tutte polynomials.
//!
//! Two independent engines compute the same polynomial: a corank-nullity sum
//! over all subsets ([`tutte_subset_sum`]) and a memoized deletion-contraction
//! recursion ([`TutteEngine`]). Coefficients are arbitrary-precision.

mod dc;
mod subset;

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

pub use dc::{tutte_dc, EngineStats, TutteConfig, TutteEngine};
pub use subset::{tutte_subset_sum, SUBSET_SUM_LIMIT};

use crate::bitset::binomial;
use crate::matroid::Matroid;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TutteError {
    #[error("{engine} engine limit exceeded: {got} elements > {limit}")]
    OverLimit {
        engine: &'static str,
        limit: usize,
        got: usize,
    },
}

/// `coeffs[i][j]` is the coefficient of `x^i y^j`; the matrix is
/// `(rank + 1) x (corank + 1)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TuttePolynomial {
    rank: usize,
    corank: usize,
    coeffs: Vec<Vec<BigUint>>,
}

impl TuttePolynomial {
    pub fn zero(rank: usize, corank: usize) -> Self {
        TuttePolynomial {
            rank,
            corank,
            coeffs: vec![vec![BigUint::zero(); corank + 1]; rank + 1],
        }
    }

    /// `x^rank y^corank`.
    pub fn monomial(rank: usize, corank: usize) -> Self {
        let mut p = Self::zero(rank, corank);
        p.coeffs[rank][corank] = BigUint::one();
        p
    }

    /// Builds a polynomial from a coefficient matrix; `None` if the matrix is ragged.
    pub fn from_coeffs(coeffs: Vec<Vec<BigUint>>) -> Option<Self> {
        let rows = coeffs.len();
        if rows == 0 {
            return None;
        }
        let cols = coeffs[0].len();
        if cols == 0 || coeffs.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(TuttePolynomial {
            rank: rows - 1,
            corank: cols - 1,
            coeffs,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn corank(&self) -> usize {
        self.corank
    }

    pub fn coeffs(&self) -> &[Vec<BigUint>] {
        &self.coeffs
    }

    /// Coefficient of `x^i y^j`, zero outside the matrix.
    pub fn coeff(&self, i: usize, j: usize) -> BigUint {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_default()
    }

    /// In-place sum; `self` must be at least as large as `other`.
    pub(crate) fn add_into(&mut self, other: &TuttePolynomial) {
        debug_assert!(other.rank <= self.rank && other.corank <= self.corank);
        for (i, row) in other.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    self.coeffs[i][j] += c;
                }
            }
        }
    }

    /// Multiplies by `x^a y^b`, growing the matrix accordingly.
    pub fn shifted(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.rank + a, self.corank + b);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out.coeffs[i + a][j + b] = c.clone();
            }
        }
        out
    }

    /// Polynomial product; the matrix shapes add.
    pub fn product(&self, other: &TuttePolynomial) -> Self {
        let mut out = Self::zero(self.rank + other.rank, self.corank + other.corank);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (k, row2) in other.coeffs.iter().enumerate() {
                    for (l, d) in row2.iter().enumerate() {
                        if !d.is_zero() {
                            out.coeffs[i + k][j + l] += c * d;
                        }
                    }
                }
            }
        }
        out
    }

    /// Swaps the roles of `x` and `y`.
    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.corank, self.rank);
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out.coeffs[j][i] = c.clone();
            }
        }
        out
    }

    /// Exact value at integer `(x, y)`, with `0^0 = 1`.
    pub fn evaluate(&self, x: i64, y: i64) -> BigInt {
        let xs = powers(x, self.rank);
        let ys = powers(y, self.corank);
        let mut total = BigInt::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    total += BigInt::from(c.clone()) * &xs[i] * &ys[j];
                }
            }
        }
        total
    }

    /// Evaluation at a point where the value is known to be nonnegative.
    pub fn evaluate_unsigned(&self, x: u64, y: u64) -> BigUint {
        let xs = powers(x as i64, self.rank);
        let ys = powers(y as i64, self.corank);
        let mut total = BigUint::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    let term = BigInt::from(c.clone()) * &xs[i] * &ys[j];
                    total += term.to_biguint().expect("nonnegative term");
                }
            }
        }
        total
    }
}

fn powers(base: i64, max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = BigInt::one();
    for _ in 0..=max {
        out.push(acc.clone());
        acc *= base;
    }
    out
}

/// Exact value of `t` at integer `(x, y)`.
pub fn evaluate(t: &TuttePolynomial, x: i64, y: i64) -> BigInt {
    t.evaluate(x, y)
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for i in (0..=self.rank).rev() {
            for j in 0..=self.corank {
                let c = &self.coeffs[i][j];
                if c.is_zero() {
                    continue;
                }
                let mut term = String::new();
                let mono = match (i, j) {
                    (0, 0) => String::new(),
                    _ => {
                        let xs = match i {
                            0 => String::new(),
                            1 => "x".into(),
                            _ => format!("x^{i}"),
                        };
                        let ys = match j {
                            0 => String::new(),
                            1 => "y".into(),
                            _ => format!("y^{j}"),
                        };
                        format!("{xs}{ys}")
                    }
                };
                if !c.is_one() || mono.is_empty() {
                    term.push_str(&c.to_string());
                }
                term.push_str(&mono);
                terms.push(term);
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" + "))
        }
    }
}

impl fmt::Debug for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T[{}x{}]({})", self.rank, self.corank, self)
    }
}

/// Tutte polynomial of `U_{k,n}` from the size-graded subset sum
/// `sum_s C(n,s) (x-1)^(k - min(s,k)) (y-1)^(max(s-k, 0))`.
pub fn uniform_tutte(k: usize, n: usize) -> TuttePolynomial {
    assert!(k <= n);
    let corank = n - k;
    let mut signed = vec![vec![BigInt::zero(); corank + 1]; k + 1];
    for s in 0..=n {
        let a = k - s.min(k);
        let b = s.saturating_sub(k);
        let weight = BigInt::from(binomial(n, s));
        for i in 0..=a {
            let xi = BigInt::from(binomial(a, i)) * if (a - i) % 2 == 0 { 1 } else { -1 };
            for j in 0..=b {
                let yj = BigInt::from(binomial(b, j)) * if (b - j) % 2 == 0 { 1 } else { -1 };
                signed[i][j] += &weight * &xi * &yj;
            }
        }
    }
    from_signed(signed)
}

pub(crate) fn from_signed(signed: Vec<Vec<BigInt>>) -> TuttePolynomial {
    let coeffs = signed
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| c.to_biguint().expect("Tutte coefficients are nonnegative"))
                .collect()
        })
        .collect();
    TuttePolynomial::from_coeffs(coeffs).expect("rectangular")
}

/// The default engine: deletion-contraction with a fresh memo table.
pub fn tutte(m: &Matroid) -> TuttePolynomial {
    TutteEngine::new(TutteConfig::default())
        .tutte(m)
        .expect("default limits cover every representable matroid")
}
