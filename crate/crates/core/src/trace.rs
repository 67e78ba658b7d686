//! Replays the induction behind the multiplicative inequality for split
//! matroids on a concrete input, building a tree of checked steps.
//!
//! Each node is one of: a direct-sum split into components, a dualization, a
//! deletion/contraction at a clean element (both minors loopless and
//! coloopless), or a base case (rank or corank at most two, or a minimal
//! matroid). Every node re-derives its own Tutte evaluations from scratch, so
//! a verified trace is an independent check rather than a propagated claim.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::bitset::binomial;
use crate::flats;
use crate::format;
use crate::iso;
use crate::matroid::{Matroid, MatroidError};
use crate::mw::MwReport;
use crate::tutte::{TutteConfig, TutteEngine, TutteError, TuttePolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    DirectSumSplit,
    Dualize,
    DeleteContract(usize),
    BaseRank1,
    BaseCorank1,
    BaseRank2,
    BaseCorank2,
    BaseMinimal { k: usize, n: usize },
}

impl Rule {
    pub fn is_base(&self) -> bool {
        matches!(
            self,
            Rule::BaseRank1
                | Rule::BaseCorank1
                | Rule::BaseRank2
                | Rule::BaseCorank2
                | Rule::BaseMinimal { .. }
        )
    }

    pub fn label(&self) -> String {
        match self {
            Rule::DirectSumSplit => "DirectSumSplit".into(),
            Rule::Dualize => "Dualize".into(),
            Rule::DeleteContract(e) => format!("DeleteContract({e})"),
            Rule::BaseRank1 => "BaseRank1".into(),
            Rule::BaseCorank1 => "BaseCorank1".into(),
            Rule::BaseRank2 => "BaseRank2".into(),
            Rule::BaseCorank2 => "BaseCorank2".into(),
            Rule::BaseMinimal { k, n } => format!("BaseMinimal({k},{n})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProofNode {
    pub matroid: Matroid,
    /// Short hash of the canonical serialized matroid.
    pub digest: String,
    pub rule: Rule,
    pub children: Vec<ProofNode>,
    pub mw: MwReport,
    /// Checks that failed at this node; empty when the node is sound.
    pub failures: Vec<String>,
}

impl ProofNode {
    pub fn is_sound(&self) -> bool {
        self.failures.is_empty() && self.children.iter().all(ProofNode::is_sound)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(ProofNode::node_count).sum::<usize>()
    }

    /// Pre-order walk.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a ProofNode)) {
        f(self);
        for c in &self.children {
            c.walk(f);
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProofTrace {
    pub root: ProofNode,
    pub verified: bool,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("input is not a split matroid")]
    NotSplit,
    #[error("input has loops {loops:?} or coloops {coloops:?}")]
    NotCleanInput {
        loops: Vec<usize>,
        coloops: Vec<usize>,
    },
    #[error("input has an empty ground set")]
    EmptyGroundSet,
    #[error("connected split matroid with no clean pivot and no base case: {0:?}")]
    ClassificationFailure(Box<Matroid>),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Tutte(#[from] TutteError),
}

#[derive(Clone, Debug)]
pub struct TraceOptions {
    /// Base cases with corank at most two (and below the rank) are handled by
    /// a `Dualize` step into the rank case; otherwise `BaseCorank*` nodes are used.
    pub dualize_bases: bool,
    pub tutte: TutteConfig,
}

impl Default for TraceOptions {
    fn default() -> Self {
        TraceOptions {
            dualize_bases: true,
            tutte: TutteConfig::default(),
        }
    }
}

pub fn trace(m: &Matroid) -> Result<ProofTrace, TraceError> {
    Tracer::new(TraceOptions::default()).trace(m)
}

pub struct Tracer {
    options: TraceOptions,
    engine: TutteEngine,
}

impl Tracer {
    pub fn new(options: TraceOptions) -> Self {
        let engine = TutteEngine::new(options.tutte.clone());
        Tracer { options, engine }
    }

    pub fn trace(&mut self, m: &Matroid) -> Result<ProofTrace, TraceError> {
        if m.n() == 0 {
            return Err(TraceError::EmptyGroundSet);
        }
        let (loops, coloops) = (m.loops(), m.coloops());
        if !loops.is_empty() || !coloops.is_empty() {
            return Err(TraceError::NotCleanInput {
                loops: loops.to_vec(),
                coloops: coloops.to_vec(),
            });
        }
        if !flats::is_split(m)? {
            return Err(TraceError::NotSplit);
        }
        let root = self.node(m, true)?;
        let verified = root.is_sound();
        Ok(ProofTrace { root, verified })
    }

    fn node(&mut self, m: &Matroid, may_dualize: bool) -> Result<ProofNode, TraceError> {
        let t = self.engine.tutte(m)?;
        let mw = MwReport::from_polynomial(m.n(), m.rank(), &t);
        let mut failures = Vec::new();
        if !m.is_loopless() || !m.is_coloopless() {
            failures.push("node has a loop or coloop".to_string());
        }
        if !flats::is_split(m)? {
            failures.push("node is not split".to_string());
        }
        if !mw.mult_ok {
            failures.push(format!(
                "multiplicative inequality fails: {} * {} < {}^2",
                mw.t20, mw.t02, mw.t11
            ));
        }
        if !mw.implication_chain_holds() {
            failures.push("verdicts violate mult => add => max".to_string());
        }

        let (rule, children) = if !m.is_connected()? {
            let children = m
                .components()?
                .into_iter()
                .map(|c| self.node(&m.restrict(c).matroid, true))
                .collect::<Result<Vec<_>, _>>()?;
            self.check_direct_sum(&t, &children, &mut failures)?;
            (Rule::DirectSumSplit, children)
        } else if m.rank() <= 2 {
            let rule = if m.rank() == 1 { Rule::BaseRank1 } else { Rule::BaseRank2 };
            check_low_rank(&t, m.rank(), &mut failures);
            (rule, Vec::new())
        } else if m.corank() <= 2 {
            if self.options.dualize_bases && may_dualize {
                let child = self.node(&m.dual(), false)?;
                if self.engine.tutte(&child.matroid)? != t.transpose() {
                    failures.push("dual polynomial is not the transpose".to_string());
                }
                if child.mw.t20 != mw.t02 || child.mw.t02 != mw.t20 || child.mw.t11 != mw.t11 {
                    failures.push("dual evaluations are not swapped".to_string());
                }
                (Rule::Dualize, vec![child])
            } else {
                let rule = if m.corank() == 1 { Rule::BaseCorank1 } else { Rule::BaseCorank2 };
                check_low_rank(&t.transpose(), m.corank(), &mut failures);
                (rule, Vec::new())
            }
        } else if let Some((k, n)) = recognize_minimal(m)? {
            (Rule::BaseMinimal { k, n }, Vec::new())
        } else if let Some(e) = clean_pivot(m)? {
            let deleted = m.delete(e)?.matroid;
            let contracted = m.contract(e)?.matroid;
            let children = vec![self.node(&deleted, true)?, self.node(&contracted, true)?];
            let mut sum = TuttePolynomial::zero(m.rank(), m.corank());
            for c in &children {
                sum.add_into(&self.engine.tutte(&c.matroid)?);
            }
            if sum != t {
                failures.push("T(M) != T(M\\e) + T(M/e)".to_string());
            }
            (Rule::DeleteContract(e), children)
        } else {
            return Err(TraceError::ClassificationFailure(Box::new(m.clone())));
        };

        Ok(ProofNode {
            digest: format::digest(m),
            matroid: m.clone(),
            rule,
            children,
            mw,
            failures,
        })
    }

    fn check_direct_sum(
        &mut self,
        t: &TuttePolynomial,
        children: &[ProofNode],
        failures: &mut Vec<String>,
    ) -> Result<(), TraceError> {
        if children.len() < 2 {
            failures.push("direct sum with fewer than two components".to_string());
        }
        let mut product = TuttePolynomial::monomial(0, 0);
        for c in children {
            product = product.product(&self.engine.tutte(&c.matroid)?);
            if !c.matroid.is_connected()? {
                failures.push("direct-sum child is not connected".to_string());
            }
        }
        if product != *t {
            failures.push("T(M) is not the product over components".to_string());
        }
        Ok(())
    }
}

/// Rank-1 and rank-2 base-case facts; `t` is oriented so `rank` is its x-degree.
fn check_low_rank(t: &TuttePolynomial, rank: usize, failures: &mut Vec<String>) {
    let n = t.rank() + t.corank();
    let t20 = t.evaluate_unsigned(2, 0);
    let t02 = t.evaluate_unsigned(0, 2);
    let t11 = t.evaluate_unsigned(1, 1);
    let two_n = BigUint::one() << n;
    match rank {
        1 => {
            // x + y + ... + y^(n-1)
            let closed_form = (0..=t.rank()).all(|i| {
                (0..=t.corank()).all(|j| {
                    let expected = (i == 1 && j == 0) || (i == 0 && j >= 1);
                    t.coeff(i, j) == if expected { BigUint::one() } else { BigUint::zero() }
                })
            });
            if !closed_form {
                failures.push(format!("rank-1 polynomial is not x + y + ... + y^{}", n - 1));
            }
            if t20 != BigUint::from(2u32) || t02 != &two_n - 2u32 || t11 != BigUint::from(n) {
                failures.push("rank-1 evaluations differ from (2, 2^n - 2, n)".to_string());
            }
        }
        2 => {
            if t.coeff(2, 0) != BigUint::one() || t.coeff(0, n - 2) != BigUint::one() {
                failures.push("rank-2 coefficients [x^2], [y^(n-2)] are not both 1".to_string());
            }
            if &t20 * &t02 < two_n {
                failures.push("rank-2 bound T(2,0) T(0,2) >= 2^n fails".to_string());
            }
            if t11 > BigUint::from(binomial(n, 2)) {
                failures.push("basis count exceeds C(n,2)".to_string());
            }
        }
        _ => failures.push(format!("low-rank check called with rank {rank}")),
    }
}

/// Smallest element whose deletion and contraction are both loopless and coloopless.
pub fn clean_pivot(m: &Matroid) -> Result<Option<usize>, MatroidError> {
    for e in 0..m.n() {
        let d = m.delete(e)?.matroid;
        let c = m.contract(e)?.matroid;
        if d.is_loopless() && d.is_coloopless() && c.is_loopless() && c.is_coloopless() {
            return Ok(Some(e));
        }
    }
    Ok(None)
}

/// True when every single-element deletion or contraction has a loop or coloop.
pub fn no_clean_pivot(m: &Matroid) -> bool {
    clean_pivot(m).expect("elements are in range").is_none()
}

/// `Some((k, n))` when `m` is isomorphic to `T_{k,n}`.
///
/// Necessary conditions go first: basis count `k(n-k)+1`, and either no
/// proper cyclic flat (when `T_{k,n}` is uniform) or exactly one, a rank-1
/// parallel class of size `n-k`. A permutation search then settles it.
pub fn recognize_minimal(m: &Matroid) -> Result<Option<(usize, usize)>, MatroidError> {
    let (k, n) = (m.rank(), m.n());
    if k == 0 || k >= n || m.basis_count() != k * (n - k) + 1 {
        return Ok(None);
    }
    let proper = flats::proper_cyclic_flats(m)?;
    let shape_ok = if k >= 2 && n - k >= 2 {
        proper.len() == 1 && proper[0].rank == 1 && proper[0].set.len() == n - k
    } else {
        proper.is_empty()
    };
    if !shape_ok {
        return Ok(None);
    }
    let target = Matroid::minimal(k, n)?;
    Ok(iso::is_isomorphic(m, &target).then_some((k, n)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseClassification {
    RankOrCorankAtMost2,
    Minimal { k: usize, n: usize },
    Both { k: usize, n: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no base case matches a matroid satisfying every precondition: {0:?}")]
    ExhaustivenessFailure(Box<Matroid>),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Classifies a connected split matroid without loops, coloops or a clean pivot.
pub fn classify_base_case(m: &Matroid) -> Result<BaseClassification, ClassifyError> {
    if !m.is_loopless() || !m.is_coloopless() {
        return Err(ClassifyError::Precondition("matroid has loops or coloops".into()));
    }
    if !flats::is_connected_split(m)? {
        return Err(ClassifyError::Precondition("matroid is not connected split".into()));
    }
    if let Some(e) = clean_pivot(m)? {
        return Err(ClassifyError::Precondition(format!(
            "element {e} is a clean pivot"
        )));
    }
    let small = m.rank() <= 2 || m.corank() <= 2;
    match (small, recognize_minimal(m)?) {
        (true, Some((k, n))) => Ok(BaseClassification::Both { k, n }),
        (true, None) => Ok(BaseClassification::RankOrCorankAtMost2),
        (false, Some((k, n))) => Ok(BaseClassification::Minimal { k, n }),
        (false, None) => Err(ClassifyError::ExhaustivenessFailure(Box::new(m.clone()))),
    }
}

/// Graphviz description of the trace tree.
pub fn to_dot(trace: &ProofTrace) -> String {
    let mut out = String::from("digraph trace {\n  node [shape=box, fontname=monospace];\n");
    let mut next = 0usize;
    fn emit(node: &ProofNode, id: usize, next: &mut usize, out: &mut String) {
        let colour = if node.failures.is_empty() { "black" } else { "red" };
        let _ = writeln!(
            out,
            "  n{id} [label=\"{}\\nn={} r={}\\nT(2,0)={} T(0,2)={} T(1,1)={}\", color={colour}];",
            node.rule.label(),
            node.matroid.n(),
            node.matroid.rank(),
            node.mw.t20,
            node.mw.t02,
            node.mw.t11
        );
        for child in &node.children {
            *next += 1;
            let cid = *next;
            let _ = writeln!(out, "  n{id} -> n{cid};");
            emit(child, cid, next, out);
        }
    }
    emit(&trace.root, 0, &mut next, &mut out);
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{graphic, Multigraph};

    fn k4() -> Matroid {
        graphic(&Multigraph::complete(4)).unwrap()
    }

    #[test]
    fn minimal_is_a_single_base_node() {
        let t = trace(&Matroid::minimal(4, 7).unwrap()).unwrap();
        assert!(t.verified);
        assert_eq!(t.root.rule, Rule::BaseMinimal { k: 4, n: 7 });
        assert!(t.root.children.is_empty());
    }

    #[test]
    fn rank_one_base() {
        let t = trace(&Matroid::uniform(1, 3).unwrap()).unwrap();
        assert!(t.verified);
        assert_eq!(t.root.rule, Rule::BaseRank1);
        assert_eq!(t.root.node_count(), 1);
    }

    #[test]
    fn k4_pivots_and_verifies() {
        let t = trace(&k4()).unwrap();
        assert!(t.verified);
        assert_eq!(t.root.rule, Rule::DeleteContract(0));
        assert_eq!(t.root.children.len(), 2);
        t.root.walk(&mut |node| {
            if node.children.is_empty() {
                assert!(node.rule.is_base(), "leaf {:?}", node.rule);
            }
        });
    }

    #[test]
    fn corank_bases_with_and_without_dualization() {
        let m = Matroid::uniform(3, 5).unwrap();
        let t = trace(&m).unwrap();
        assert_eq!(t.root.rule, Rule::Dualize);
        assert_eq!(t.root.children[0].rule, Rule::BaseRank2);
        assert!(t.verified);
        let mut tracer = Tracer::new(TraceOptions {
            dualize_bases: false,
            ..TraceOptions::default()
        });
        let t = tracer.trace(&m).unwrap();
        assert_eq!(t.root.rule, Rule::BaseCorank2);
        assert!(t.verified);
    }

    #[test]
    fn direct_sums_split() {
        let m = Matroid::minimal(3, 6)
            .unwrap()
            .direct_sum(&Matroid::uniform(2, 4).unwrap())
            .unwrap();
        let t = trace(&m).unwrap();
        assert!(t.verified);
        assert_eq!(t.root.rule, Rule::DirectSumSplit);
        assert_eq!(t.root.children.len(), 2);
    }

    #[test]
    fn input_errors() {
        assert!(matches!(
            trace(&Matroid::uniform(1, 1).unwrap()),
            Err(TraceError::NotCleanInput { .. })
        ));
        let doubled = graphic(
            &Multigraph::new(4, vec![(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (3, 0)]).unwrap(),
        )
        .unwrap();
        assert_eq!(trace(&doubled).unwrap_err(), TraceError::NotSplit);
        assert_eq!(
            trace(&Matroid::uniform(0, 0).unwrap()).unwrap_err(),
            TraceError::EmptyGroundSet
        );
    }

    #[test]
    fn pivot_examples() {
        // every element of T_{4,7}: contracting a parallel element leaves loops,
        // deleting a path element leaves coloops
        let t47 = Matroid::minimal(4, 7).unwrap();
        for e in 0..7 {
            let d = t47.delete(e).unwrap().matroid;
            let c = t47.contract(e).unwrap().matroid;
            let dirty = !d.is_loopless() || !d.is_coloopless() || !c.is_loopless() || !c.is_coloopless();
            assert!(dirty, "element {e}");
        }
        assert!(no_clean_pivot(&t47));
        assert!(!no_clean_pivot(&k4()));
        assert!(no_clean_pivot(&Matroid::uniform(1, 2).unwrap()));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_base_case(&Matroid::minimal(3, 7).unwrap()),
            Ok(BaseClassification::Minimal { k: 3, n: 7 })
        );
        assert_eq!(
            classify_base_case(&Matroid::minimal(1, 2).unwrap()),
            Ok(BaseClassification::Both { k: 1, n: 2 })
        );
        // U_{2,5}: deleting gives U_{2,4}, contracting gives U_{1,4}, both clean
        let u25 = Matroid::uniform(2, 5).unwrap();
        assert_eq!(clean_pivot(&u25).unwrap(), Some(0));
        assert!(matches!(classify_base_case(&u25), Err(ClassifyError::Precondition(_))));
        assert!(matches!(
            classify_base_case(&Matroid::uniform(1, 1).unwrap()),
            Err(ClassifyError::Precondition(_))
        ));
    }

    #[test]
    fn recognizes_relabelled_minimal() {
        let m = Matroid::minimal(3, 7).unwrap().relabel(&[5, 0, 3, 6, 1, 2, 4]);
        assert_eq!(recognize_minimal(&m).unwrap(), Some((3, 7)));
        assert_eq!(recognize_minimal(&Matroid::uniform(3, 7).unwrap()).unwrap(), None);
        assert_eq!(recognize_minimal(&Matroid::uniform(3, 4).unwrap()).unwrap(), Some((3, 4)));
    }

    #[test]
    fn dot_output_mentions_every_node() {
        let t = trace(&k4()).unwrap();
        let dot = to_dot(&t);
        assert!(dot.starts_with("digraph trace {"));
        assert_eq!(dot.matches("label=").count(), t.root.node_count());
    }
}
