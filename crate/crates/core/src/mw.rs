//! The three Merino–Welsh inequalities, the rank-2 census and closed-form family checks.
//!
//! For a loopless, coloopless matroid with `a = T(2,0)`, `b = T(0,2)`, `c = T(1,1)`:
//!
//! * max: `max(a, b) >= c`
//! * additive: `a + b >= 2c`
//! * multiplicative: `a * b >= c^2`

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::bitset::binomial;
use crate::flats;
use crate::iso;
use crate::matroid::{Matroid, MatroidError};
use crate::tutte::{TutteEngine, TutteError, TuttePolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MwError {
    #[error("matroid has loops at elements {0:?}")]
    LoopsPresent(Vec<usize>),
    #[error("matroid has coloops at elements {0:?}")]
    ColoopsPresent(Vec<usize>),
    #[error(transparent)]
    Tutte(#[from] TutteError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MwReport {
    pub n: usize,
    pub rank: usize,
    pub t20: BigUint,
    pub t02: BigUint,
    pub t11: BigUint,
    pub max_ok: bool,
    pub add_ok: bool,
    pub mult_ok: bool,
}

impl MwReport {
    /// Decides all three inequalities from the three evaluations.
    pub fn from_evaluations(n: usize, rank: usize, t20: BigUint, t02: BigUint, t11: BigUint) -> Self {
        let max_ok = t20.clone().max(t02.clone()) >= t11;
        let add_ok = &t20 + &t02 >= &t11 * 2u32;
        let mult_ok = &t20 * &t02 >= &t11 * &t11;
        MwReport {
            n,
            rank,
            t20,
            t02,
            t11,
            max_ok,
            add_ok,
            mult_ok,
        }
    }

    pub fn from_polynomial(n: usize, rank: usize, t: &TuttePolynomial) -> Self {
        Self::from_evaluations(
            n,
            rank,
            t.evaluate_unsigned(2, 0),
            t.evaluate_unsigned(0, 2),
            t.evaluate_unsigned(1, 1),
        )
    }

    /// A report that fails any inequality is a counterexample.
    pub fn is_counterexample(&self) -> bool {
        !(self.max_ok && self.add_ok && self.mult_ok)
    }

    /// `mult => add => max`.
    pub fn implication_chain_holds(&self) -> bool {
        (!self.mult_ok || self.add_ok) && (!self.add_ok || self.max_ok)
    }
}

fn require_clean(m: &Matroid) -> Result<(), MwError> {
    let loops = m.loops();
    if !loops.is_empty() {
        return Err(MwError::LoopsPresent(loops.to_vec()));
    }
    let coloops = m.coloops();
    if !coloops.is_empty() {
        return Err(MwError::ColoopsPresent(coloops.to_vec()));
    }
    Ok(())
}

/// Evaluates `T(2,0)`, `T(0,2)`, `T(1,1)` and decides the three inequalities.
pub fn check_mw(m: &Matroid) -> Result<MwReport, MwError> {
    check_mw_with(&mut TutteEngine::new(Default::default()), m)
}

pub fn check_mw_with(engine: &mut TutteEngine, m: &Matroid) -> Result<MwReport, MwError> {
    require_clean(m)?;
    let t = engine.tutte(m)?;
    Ok(MwReport::from_polynomial(m.n(), m.rank(), &t))
}

/// `C(n,2)^2 <= 2^n`, exactly.
pub fn rank2_threshold_check(n: usize) -> bool {
    let c = BigUint::from(binomial(n, 2));
    &c * &c <= BigUint::one() << n
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Census {
    pub n: usize,
    pub class_size_multisets: Vec<Vec<usize>>,
    pub reports: Vec<MwReport>,
    pub all_pass: bool,
}

/// Partitions of `n` as non-increasing part lists, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Parallel-class patterns of loopless, coloopless rank-2 matroids on `n`
/// elements: at least two classes, and not two classes one of which is a singleton.
pub fn rank2_class_patterns(n: usize) -> Vec<Vec<usize>> {
    partitions(n)
        .into_iter()
        .filter(|p| p.len() >= 2 && !(p.len() == 2 && p.contains(&1)))
        .collect()
}

/// One census per `n` in `2..=n_max`, covering every isomorphism class of
/// loopless, coloopless rank-2 matroids.
pub fn verify_rank2_exhaustive(n_max: usize) -> Result<Vec<Rank2Census>, MwError> {
    (2..=n_max).map(rank2_census).collect()
}

pub fn rank2_census(n: usize) -> Result<Rank2Census, MwError> {
    let patterns = rank2_class_patterns(n);
    let reports = patterns
        .par_iter()
        .map(|p| {
            let m = Matroid::rank2_from_partition(p)?;
            // the pattern filter must have excluded every loop and coloop
            assert!(
                m.loops().is_empty() && m.coloops().is_empty(),
                "census pattern {p:?} produced loops or coloops"
            );
            check_mw(&m)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let all_pass = reports.iter().all(|r| r.mult_ok);
    Ok(Rank2Census {
        n,
        class_size_multisets: patterns,
        reports,
        all_pass,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalFamilyRow {
    pub k: usize,
    pub n: usize,
    pub basis_count_ok: bool,
    pub dual_isomorphic: bool,
    pub connected: bool,
    pub split: bool,
    pub report: MwReport,
}

impl MinimalFamilyRow {
    pub fn passed(&self) -> bool {
        self.basis_count_ok && self.dual_isomorphic && self.connected && self.split && self.report.mult_ok
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalFamilySummary {
    pub rows: Vec<MinimalFamilyRow>,
}

impl MinimalFamilySummary {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(MinimalFamilyRow::passed)
    }
}

/// Checks every `T_{k,n}` with `1 <= k < n <= n_max` and `k <= k_max`.
pub fn minimal_family_suite(k_max: usize, n_max: usize) -> Result<MinimalFamilySummary, MwError> {
    if n_max > 14 {
        return Err(MatroidError::OverLimit {
            what: "minimal family size",
            limit: 14,
            got: n_max,
        }
        .into());
    }
    let mut params = Vec::new();
    for n in 2..=n_max {
        for k in 1..n.min(k_max + 1) {
            params.push((k, n));
        }
    }
    let rows = params
        .par_iter()
        .map(|&(k, n)| -> Result<MinimalFamilyRow, MwError> {
            let m = Matroid::minimal(k, n)?;
            let dual_target = Matroid::minimal(n - k, n)?;
            Ok(MinimalFamilyRow {
                k,
                n,
                basis_count_ok: m.basis_count() == k * (n - k) + 1,
                dual_isomorphic: iso::is_isomorphic(&m.dual(), &dual_target),
                connected: m.is_connected()?,
                split: flats::is_split(&m)?,
                report: check_mw(&m)?,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MinimalFamilySummary { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn rank_one_examples() {
        let r = check_mw(&Matroid::uniform(1, 4).unwrap()).unwrap();
        assert_eq!((r.t20.clone(), r.t02.clone(), r.t11.clone()), (big(2), big(14), big(4)));
        assert!(r.mult_ok && r.add_ok && r.max_ok);

        let r = check_mw(&Matroid::uniform(1, 2).unwrap()).unwrap();
        assert_eq!((r.t20.clone(), r.t02.clone(), r.t11.clone()), (big(2), big(2), big(2)));
        assert!(r.mult_ok);
        assert_eq!(&r.t20 * &r.t02, &r.t11 * &r.t11);
    }

    #[test]
    fn minimal_example() {
        let r = check_mw(&Matroid::minimal(4, 7).unwrap()).unwrap();
        assert_eq!(r.t11, big(13));
        assert!(r.mult_ok);
    }

    #[test]
    fn rejects_loops_and_coloops() {
        assert_eq!(
            check_mw(&Matroid::uniform(1, 1).unwrap()),
            Err(MwError::ColoopsPresent(vec![0]))
        );
        let with_loop = Matroid::from_bases(3, 1, &[vec![0], vec![1]]).unwrap();
        let err = check_mw(&with_loop).unwrap_err();
        assert_eq!(err, MwError::LoopsPresent(vec![2]));
    }

    #[test]
    fn verdicts_from_raw_numbers() {
        // max holds, additive and multiplicative fail
        let r = MwReport::from_evaluations(0, 0, big(10), big(1), big(6));
        assert!(r.max_ok && !r.add_ok && !r.mult_ok);
        assert!(r.implication_chain_holds());
        assert!(r.is_counterexample());
        // additive holds, multiplicative fails
        let r = MwReport::from_evaluations(0, 0, big(10), big(2), big(5));
        assert!(r.max_ok && r.add_ok && !r.mult_ok);
    }

    #[test]
    fn partitions_in_decreasing_lex_order() {
        assert_eq!(
            partitions(4),
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert_eq!(partitions(12).len(), 77);
        assert_eq!(
            rank2_class_patterns(4),
            vec![vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
        assert!(rank2_class_patterns(2).is_empty());
    }

    #[test]
    fn census_small() {
        let c = rank2_census(2).unwrap();
        assert!(c.reports.is_empty() && c.all_pass);
        let c = rank2_census(4).unwrap();
        assert_eq!(c.reports.len(), 3);
        assert!(c.all_pass);
    }

    #[test]
    fn threshold() {
        assert!(!rank2_threshold_check(12)); // 4356 > 4096
        assert!(rank2_threshold_check(13)); // 6084 <= 8192
        assert!(rank2_threshold_check(100));
        assert_eq!(binomial(12, 2).pow(2), 4356);
        assert_eq!(binomial(13, 2).pow(2), 6084);
        // the threshold is not monotone below 13
        let first_from_which_always = (2..=60).rev().take_while(|&n| rank2_threshold_check(n)).last();
        assert_eq!(first_from_which_always, Some(13));
    }

    #[test]
    fn minimal_suite_rows() {
        let s = minimal_family_suite(6, 7).unwrap();
        assert!(s.all_pass());
        let row = s.rows.iter().find(|r| (r.k, r.n) == (4, 7)).unwrap();
        assert!(row.dual_isomorphic && row.split && row.report.mult_ok);
        assert_eq!(row.report.t11, big(13));
        let row = s.rows.iter().find(|r| (r.k, r.n) == (1, 2)).unwrap();
        assert_eq!(&row.report.t20 * &row.report.t02, &row.report.t11 * &row.report.t11);
        let row = s.rows.iter().find(|r| (r.k, r.n) == (2, 5)).unwrap();
        assert_eq!(row.report.t11, big(7));
        assert!(minimal_family_suite(3, 15).is_err());
    }
}
