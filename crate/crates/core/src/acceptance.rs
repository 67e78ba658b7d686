//! The acceptance suite: each criterion runs to completion and reports a
//! verdict, a one-line detail and its wall-clock time against its bound.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;

use crate::corpus::{self, Entry, CORPUS_SEED};
use crate::flats;
use crate::graph::{self, graphic, Multigraph};
use crate::matroid::Matroid;
use crate::mw::{rank2_threshold_check, verify_rank2_exhaustive};
use crate::trace::{classify_base_case, no_clean_pivot, ProofNode, Tracer, TraceOptions};
use crate::tutte::{tutte_subset_sum, TutteConfig, TutteEngine, TuttePolynomial};

#[derive(Clone, Debug)]
pub struct Outcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub bound: Option<Duration>,
}

impl Outcome {
    pub fn line(&self) -> String {
        let bound = match self.bound {
            Some(b) => format!(" (bound {:.0?})", b),
            None => String::new(),
        };
        format!(
            "criterion {} [{}] {}: {} in {:.2?}{}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.detail,
            self.elapsed,
            bound
        )
    }
}

fn timed(
    id: u8,
    title: &'static str,
    bound: Option<Duration>,
    body: impl FnOnce() -> Result<String, String>,
) -> Outcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let in_time = bound.is_none_or(|b| elapsed < b);
    let (passed, mut detail) = match result {
        Ok(d) => (in_time, d),
        Err(d) => (false, d),
    };
    if !in_time {
        detail.push_str("; over time bound");
    }
    Outcome {
        id,
        title,
        passed,
        detail,
        elapsed,
        bound,
    }
}

fn engine() -> TutteEngine {
    TutteEngine::new(TutteConfig::default())
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `x + y + ... + y^(n-1)`.
fn rank_one_closed_form(n: usize) -> TuttePolynomial {
    let mut row0 = vec![BigUint::one(); n];
    row0[0] = BigUint::default();
    let mut row1 = vec![BigUint::default(); n];
    row1[0] = BigUint::one();
    TuttePolynomial::from_coeffs(vec![row0, row1]).expect("rectangular")
}

pub fn criterion_1() -> Outcome {
    timed(1, "rank-1 closed form", Some(Duration::from_secs(1)), || {
        let mut eng = engine();
        for n in 2..=20 {
            let t = eng.tutte(&Matroid::uniform(1, n).unwrap()).map_err(|e| e.to_string())?;
            ensure(t == rank_one_closed_form(n), || format!("U(1,{n}): got {t}"))?;
            let expected = (
                BigUint::from(2u32),
                (BigUint::one() << n) - 2u32,
                BigUint::from(n),
            );
            let got = (t.evaluate_unsigned(2, 0), t.evaluate_unsigned(0, 2), t.evaluate_unsigned(1, 1));
            ensure(got == expected, || format!("U(1,{n}): evaluations {got:?}"))?;
        }
        Ok("19 polynomials and evaluations exact".into())
    })
}

pub fn criterion_2() -> Outcome {
    timed(2, "minimal-matroid basis count", Some(Duration::from_secs(5)), || {
        let mut params = Vec::new();
        for n in 2..=12 {
            for k in 1..n {
                params.push((k, n));
            }
        }
        params
            .par_iter()
            .try_for_each(|&(k, n)| {
                let t = engine()
                    .tutte(&Matroid::minimal(k, n).unwrap())
                    .map_err(|e| e.to_string())?;
                let got = t.evaluate_unsigned(1, 1);
                ensure(got == BigUint::from(k * (n - k) + 1), || {
                    format!("T({k},{n}): T(1,1) = {got}")
                })
            })?;
        Ok(format!("{} matroids, T(1,1) = k(n-k)+1", params.len()))
    })
}

pub fn criterion_3() -> Outcome {
    timed(3, "rank-2 census and threshold", Some(Duration::from_secs(30)), || {
        let censuses = verify_rank2_exhaustive(12).map_err(|e| e.to_string())?;
        let mut classes = 0;
        for c in &censuses {
            ensure(c.all_pass, || format!("census n={} fails", c.n))?;
            classes += c.reports.len();
        }
        ensure(!rank2_threshold_check(12), || "threshold holds at n=12".into())?;
        ensure(rank2_threshold_check(13), || "threshold fails at n=13".into())?;
        Ok(format!(
            "{} censuses, {classes} classes all pass; threshold false at 12, true at 13",
            censuses.len()
        ))
    })
}

pub fn criterion_4() -> Outcome {
    timed(4, "rank-2 extreme coefficients", None, || {
        let family = corpus::rank2_family(12);
        family.par_iter().try_for_each(|e| {
            let n = e.matroid.n();
            let t = engine().tutte(&e.matroid).map_err(|err| err.to_string())?;
            ensure(
                t.coeff(2, 0) == BigUint::one() && t.coeff(0, n - 2) == BigUint::one(),
                || format!("{}: {t}", e.name),
            )
        })?;
        Ok(format!("{} census matroids have [x^2] = [y^(n-2)] = 1", family.len()))
    })
}

pub fn criterion_5() -> Outcome {
    timed(5, "duality and direct-sum identities", Some(Duration::from_secs(60)), || {
        let entries = corpus::identity_corpus();
        ensure(entries.len() >= 200, || format!("corpus has only {} entries", entries.len()))?;
        let polys: Vec<TuttePolynomial> = entries
            .par_iter()
            .map(|e| engine().tutte(&e.matroid).map_err(|err| err.to_string()))
            .collect::<Result<_, _>>()?;
        entries.par_iter().zip(&polys).try_for_each(|(e, t)| {
            let dual = engine().tutte(&e.matroid.dual()).map_err(|err| err.to_string())?;
            ensure(dual == t.transpose(), || format!("{}: dual is not the transpose", e.name))
        })?;
        // the sum side comes from the subset engine, the factors from deletion-contraction
        let pairs: Vec<(usize, usize)> = (0..entries.len())
            .map(|i| (i, (i * 7 + 3) % entries.len()))
            .filter(|&(i, j)| entries[i].matroid.n() + entries[j].matroid.n() <= 16)
            .collect();
        pairs.par_iter().try_for_each(|&(i, j)| {
            let sum = entries[i].matroid.direct_sum(&entries[j].matroid).map_err(|e| e.to_string())?;
            let t = tutte_subset_sum(&sum).map_err(|e| e.to_string())?;
            ensure(t == polys[i].product(&polys[j]), || {
                format!("{} + {}: product identity fails", entries[i].name, entries[j].name)
            })
        })?;
        Ok(format!(
            "{} duals and {} direct sums exact",
            entries.len(),
            pairs.len()
        ))
    })
}

pub fn criterion_6() -> Outcome {
    timed(6, "engine equivalence", None, || {
        let entries = corpus::full_corpus();
        entries.par_iter().try_for_each(|e| {
            let a = engine().tutte(&e.matroid).map_err(|err| err.to_string())?;
            let b = tutte_subset_sum(&e.matroid).map_err(|err| err.to_string())?;
            ensure(a == b, || format!("{}: {a} vs {b}", e.name))
        })?;
        let max_n = entries.iter().map(|e| e.matroid.n()).max().unwrap_or(0);
        Ok(format!("{} matroids agree coefficient-wise, n <= {max_n}", entries.len()))
    })
}

pub fn criterion_7() -> Outcome {
    timed(7, "orientation oracles", Some(Duration::from_secs(60)), || {
        let graphs = corpus::bridgeless_multigraphs(40, 12, CORPUS_SEED);
        graphs.par_iter().try_for_each(|(name, g)| {
            let t = engine()
                .tutte(&graphic(g).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let tau = graph::count_spanning_trees(g).map_err(|e| e.to_string())?;
            let alpha = graph::count_acyclic_orientations(g).map_err(|e| e.to_string())?;
            let alpha_star = graph::count_totally_cyclic_orientations(g).map_err(|e| e.to_string())?;
            let got = (t.evaluate_unsigned(1, 1), t.evaluate_unsigned(2, 0), t.evaluate_unsigned(0, 2));
            let want = (BigUint::from(tau), BigUint::from(alpha), BigUint::from(alpha_star));
            ensure(got == want, || format!("{name}: Tutte {got:?} vs counts {want:?}"))
        })?;
        Ok(format!("{} graphs match tau, alpha, alpha*", graphs.len()))
    })
}

fn is_clean(m: &Matroid) -> bool {
    m.n() > 0 && m.is_loopless() && m.is_coloopless()
}

/// Split, loopless, coloopless matroids on at most ten elements.
pub fn trace_corpus() -> Vec<Entry> {
    let mut pool = corpus::minimal_family(10);
    pool.extend(corpus::uniform_family(10));
    pool.extend(corpus::rank2_family(10));
    let mut graphs: Vec<(String, Multigraph)> = corpus::named_graphs();
    graphs.extend(
        corpus::random_multigraphs(400, 10, CORPUS_SEED ^ 1)
            .into_iter()
            .enumerate()
            .map(|(i, g)| (format!("random-{i}"), g)),
    );
    for (name, g) in graphs {
        if g.edge_count() <= 10 {
            pool.push(Entry {
                name: format!("M({name})"),
                matroid: graphic(&g).unwrap(),
            });
        }
    }
    let k4 = graphic(&Multigraph::complete(4)).unwrap();
    let mut summands: Vec<Entry> = corpus::minimal_family(8);
    summands.extend(corpus::uniform_family(6));
    summands.push(Entry {
        name: "M(K4)".into(),
        matroid: k4,
    });
    summands.retain(|e| is_clean(&e.matroid));
    for a in &summands {
        for b in &summands {
            if a.matroid.n() + b.matroid.n() <= 10 {
                pool.push(Entry {
                    name: format!("{}+{}", a.name, b.name),
                    matroid: a.matroid.direct_sum(&b.matroid).unwrap(),
                });
            }
        }
    }
    pool.retain(|e| is_clean(&e.matroid) && flats::is_split(&e.matroid).unwrap_or(false));
    pool
}

/// Connected split matroids on at most nine elements, including graphic
/// matroids of multigraphs with at most nine edges.
pub fn exhaustiveness_corpus() -> Vec<Entry> {
    let mut pool = corpus::minimal_family(9);
    pool.extend(corpus::uniform_family(9));
    pool.extend(corpus::rank2_family(9));
    let mut graphs: Vec<Multigraph> = corpus::named_graphs().into_iter().map(|(_, g)| g).collect();
    graphs.extend(corpus::random_multigraphs(1500, 9, CORPUS_SEED ^ 2));
    for (i, g) in graphs.iter().enumerate() {
        if g.edge_count() <= 9 {
            pool.push(Entry {
                name: format!("graph-{i}"),
                matroid: graphic(g).unwrap(),
            });
        }
    }
    pool.retain(|e| {
        is_clean(&e.matroid) && flats::is_connected_split(&e.matroid).unwrap_or(false)
    });
    pool
}

fn classify_if_stuck(m: &Matroid, label: &str) -> Result<bool, String> {
    if !is_clean(m) || !m.is_connected().map_err(|e| e.to_string())? || !no_clean_pivot(m) {
        return Ok(false);
    }
    classify_base_case(m)
        .map(|_| true)
        .map_err(|e| format!("{label}: {e}"))
}

pub fn criterion_8() -> Outcome {
    timed(8, "split traces verified", Some(Duration::from_secs(300)), || {
        let entries = trace_corpus();
        let has_k4 = entries.iter().any(|e| e.name == "M(K4)");
        let minimal_count = entries.iter().filter(|e| e.name.starts_with("T(") && !e.name.contains('+')).count();
        ensure(has_k4 && minimal_count == 45, || {
            format!("trace corpus is missing M(K4) or minimal matroids ({minimal_count})")
        })?;
        let per_entry: Vec<(usize, usize)> = entries
            .par_iter()
            .map(|e| {
                let t = Tracer::new(TraceOptions::default())
                    .trace(&e.matroid)
                    .map_err(|err| format!("{}: {err}", e.name))?;
                ensure(t.verified, || format!("{}: trace not verified", e.name))?;
                let mut nodes = Vec::new();
                t.root.walk(&mut |n: &ProofNode| nodes.push(n.matroid.clone()));
                let mut classified = 0;
                for m in &nodes {
                    if classify_if_stuck(m, &e.name)? {
                        classified += 1;
                    }
                }
                Ok((nodes.len(), classified))
            })
            .collect::<Result<_, String>>()?;
        let stuck = exhaustiveness_corpus();
        let stuck_classified = stuck
            .par_iter()
            .map(|e| classify_if_stuck(&e.matroid, &e.name).map(usize::from))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .sum::<usize>();
        let nodes: usize = per_entry.iter().map(|p| p.0).sum();
        let classified: usize = per_entry.iter().map(|p| p.1).sum();
        Ok(format!(
            "{} traces ({nodes} nodes) verified; {classified} stuck trace nodes and {stuck_classified} of {} connected split corpus matroids classified, no failures",
            entries.len(),
            stuck.len()
        ))
    })
}

/// Two parallel pairs and a path closing a 4-cycle.
pub fn doubled_four_cycle() -> Multigraph {
    Multigraph::new(4, vec![(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (3, 0)]).unwrap()
}

pub fn criterion_9() -> Outcome {
    timed(9, "split recognition fixtures", None, || {
        let r = flats::cyclic_flats(&Matroid::minimal(4, 7).unwrap()).map_err(|e| e.to_string())?;
        ensure(r.is_split && !r.is_paving && !r.is_copaving, || {
            format!(
                "T(4,7): split={} paving={} copaving={}",
                r.is_split, r.is_paving, r.is_copaving
            )
        })?;
        let m = graphic(&doubled_four_cycle()).map_err(|e| e.to_string())?;
        let r = flats::cyclic_flats(&m).map_err(|e| e.to_string())?;
        let (a, b) = r
            .chain_witness
            .ok_or_else(|| "doubled 4-cycle: no nested cyclic flats reported".to_string())?;
        ensure(!r.is_split && a.is_subset(b) && a != b, || {
            "doubled 4-cycle classified as split".to_string()
        })?;
        Ok(format!(
            "T(4,7) split, not paving, not copaving; doubled 4-cycle not split, chain {a:?} < {b:?}"
        ))
    })
}

pub fn run_all() -> Vec<Outcome> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ]
}
