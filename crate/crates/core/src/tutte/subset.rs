//! Corank-nullity expansion `T = sum_A (x-1)^(r(E)-r(A)) (y-1)^(|A|-r(A))`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::{from_signed, TutteError, TuttePolynomial};
use crate::bitset::{binomial, ElementSet};
use crate::matroid::{Matroid, RANK_TABLE_LIMIT};

pub const SUBSET_SUM_LIMIT: usize = 20;

/// Reference engine. Subset ranks come from the incremental rank table; the
/// `2^n` sweep is split into chunks summed in parallel.
pub fn tutte_subset_sum(m: &Matroid) -> Result<TuttePolynomial, TutteError> {
    let limit = SUBSET_SUM_LIMIT.min(RANK_TABLE_LIMIT);
    if m.n() > limit {
        return Err(TutteError::OverLimit {
            engine: "subset-sum",
            limit,
            got: m.n(),
        });
    }
    let table = m.rank_table().expect("size checked above");
    let r = m.rank();
    let corank = m.corank();
    let total: u64 = 1 << m.n();
    let chunk = (total / 64).max(1024);
    // histogram[a][b] = number of subsets with corank a and nullity b
    let histogram = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            let mut h = vec![vec![0u64; corank + 1]; r + 1];
            let end = ((c + 1) * chunk).min(total);
            for mask in c * chunk..end {
                let a = ElementSet(mask as u32);
                let ra = table.rank(a);
                h[r - ra][a.len() - ra] += 1;
            }
            h
        })
        .reduce(
            || vec![vec![0u64; corank + 1]; r + 1],
            |mut acc, h| {
                for (row, hrow) in acc.iter_mut().zip(h) {
                    for (x, y) in row.iter_mut().zip(hrow) {
                        *x += y;
                    }
                }
                acc
            },
        );

    let mut signed = vec![vec![BigInt::zero(); corank + 1]; r + 1];
    for (a, row) in histogram.iter().enumerate() {
        for (b, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            let count = BigInt::from(count);
            for i in 0..=a {
                let xi = signed_binomial(a, i);
                for j in 0..=b {
                    signed[i][j] += &count * &xi * signed_binomial(b, j);
                }
            }
        }
    }
    Ok(from_signed(signed))
}

/// Coefficient of `t^i` in `(t - 1)^a`.
fn signed_binomial(a: usize, i: usize) -> BigInt {
    let c = BigInt::from(binomial(a, i));
    if (a - i) % 2 == 0 {
        c
    } else {
        -c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn small_examples() {
        let t = tutte_subset_sum(&Matroid::uniform(1, 3).unwrap()).unwrap();
        assert_eq!(t.to_string(), "x + y + y^2");
        let t = tutte_subset_sum(&Matroid::uniform(1, 1).unwrap()).unwrap();
        assert_eq!(t.to_string(), "x");
        let t = tutte_subset_sum(&Matroid::minimal(2, 3).unwrap()).unwrap();
        assert_eq!(t.to_string(), "x^2 + x + y");
        let t = tutte_subset_sum(&Matroid::uniform(0, 0).unwrap()).unwrap();
        assert_eq!(t.coeff(0, 0), BigUint::from(1u32));
    }

    #[test]
    fn refuses_oversized_input() {
        let m = Matroid::uniform(1, 21).unwrap();
        assert!(matches!(
            tutte_subset_sum(&m),
            Err(TutteError::OverLimit { got: 21, .. })
        ));
    }
}
