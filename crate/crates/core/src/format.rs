//! Line-oriented JSON wire formats.
//!
//! Every document carries a `format` tag. Matroids serialize canonically:
//! each basis ascending, the basis list sorted lexicographically, compact
//! output with fixed key order, so equal matroids give byte-identical text.
//! Big integers travel as decimal strings.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::flats::CyclicFlatReport;
use crate::graph::{GraphError, Multigraph};
use crate::matroid::{Matroid, MatroidError};
use crate::mw::{MwReport, Rank2Census};
use crate::trace::{ProofNode, ProofTrace};
use crate::tutte::TuttePolynomial;

pub const MATROID_FORMAT: &str = "matroid-bases-v1";
pub const GRAPH_FORMAT: &str = "multigraph-v1";
pub const CYCLIC_FLATS_FORMAT: &str = "cyclic-flats-v1";
pub const TUTTE_FORMAT: &str = "tutte-v1";
pub const MW_FORMAT: &str = "mw-v1";
pub const TRACE_FORMAT: &str = "trace-v1";
pub const CENSUS_FORMAT: &str = "rank2-census-v1";
pub const ORACLE_FORMAT: &str = "oracle-v1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("expected format {expected:?}, found {found:?}")]
    WrongFormat { expected: &'static str, found: String },
    #[error("bad integer literal {0:?}")]
    BadInteger(String),
    #[error("coefficient matrix shape does not match rank {rank} and corank {corank}")]
    BadShape { rank: usize, corank: usize },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn expect_format(found: &str, expected: &'static str) -> Result<(), FormatError> {
    if found == expected {
        Ok(())
    } else {
        Err(FormatError::WrongFormat {
            expected,
            found: found.to_string(),
        })
    }
}

fn parse_big(s: &str) -> Result<BigUint, FormatError> {
    s.parse().map_err(|_| FormatError::BadInteger(s.to_string()))
}

#[derive(Serialize, Deserialize)]
struct MatroidDoc {
    format: String,
    n: usize,
    rank: usize,
    bases: Vec<Vec<usize>>,
}

pub fn matroid_value(m: &Matroid) -> Value {
    serde_json::to_value(MatroidDoc {
        format: MATROID_FORMAT.into(),
        n: m.n(),
        rank: m.rank(),
        bases: m.canonical_bases(),
    })
    .expect("serializable")
}

pub fn matroid_to_json(m: &Matroid) -> String {
    serde_json::to_string(&MatroidDoc {
        format: MATROID_FORMAT.into(),
        n: m.n(),
        rank: m.rank(),
        bases: m.canonical_bases(),
    })
    .expect("serializable")
}

/// Parses and validates (including basis exchange).
pub fn matroid_from_json(text: &str) -> Result<Matroid, FormatError> {
    let doc: MatroidDoc = serde_json::from_str(text)?;
    expect_format(&doc.format, MATROID_FORMAT)?;
    Ok(Matroid::from_bases(doc.n, doc.rank, &doc.bases)?)
}

/// First 16 hex digits of the SHA-256 of the canonical serialization.
pub fn digest(m: &Matroid) -> String {
    let hash = Sha256::digest(matroid_to_json(m).as_bytes());
    hash.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    format: String,
    vertices: usize,
    edges: Vec<[usize; 2]>,
}

pub fn graph_to_json(g: &Multigraph) -> String {
    serde_json::to_string(&GraphDoc {
        format: GRAPH_FORMAT.into(),
        vertices: g.vertex_count(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    })
    .expect("serializable")
}

pub fn graph_from_json(text: &str) -> Result<Multigraph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    expect_format(&doc.format, GRAPH_FORMAT)?;
    Ok(Multigraph::new(
        doc.vertices,
        doc.edges.into_iter().map(|[u, v]| (u, v)).collect(),
    )?)
}

#[derive(Serialize, Deserialize)]
struct TutteDoc {
    format: String,
    rank: usize,
    corank: usize,
    coeffs: Vec<Vec<String>>,
}

pub fn tutte_to_json(t: &TuttePolynomial) -> String {
    serde_json::to_string(&TutteDoc {
        format: TUTTE_FORMAT.into(),
        rank: t.rank(),
        corank: t.corank(),
        coeffs: t
            .coeffs()
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect(),
    })
    .expect("serializable")
}

pub fn tutte_from_json(text: &str) -> Result<TuttePolynomial, FormatError> {
    let doc: TutteDoc = serde_json::from_str(text)?;
    expect_format(&doc.format, TUTTE_FORMAT)?;
    let coeffs = doc
        .coeffs
        .iter()
        .map(|row| row.iter().map(|c| parse_big(c)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let t = TuttePolynomial::from_coeffs(coeffs).ok_or(FormatError::BadShape {
        rank: doc.rank,
        corank: doc.corank,
    })?;
    if t.rank() != doc.rank || t.corank() != doc.corank {
        return Err(FormatError::BadShape {
            rank: doc.rank,
            corank: doc.corank,
        });
    }
    Ok(t)
}

#[derive(Serialize, Deserialize)]
struct MwDoc {
    format: String,
    n: usize,
    rank: usize,
    t20: String,
    t02: String,
    t11: String,
    max: bool,
    add: bool,
    mult: bool,
}

pub fn mw_value(r: &MwReport) -> Value {
    serde_json::to_value(mw_doc(r)).expect("serializable")
}

fn mw_doc(r: &MwReport) -> MwDoc {
    MwDoc {
        format: MW_FORMAT.into(),
        n: r.n,
        rank: r.rank,
        t20: r.t20.to_string(),
        t02: r.t02.to_string(),
        t11: r.t11.to_string(),
        max: r.max_ok,
        add: r.add_ok,
        mult: r.mult_ok,
    }
}

pub fn mw_to_json(r: &MwReport) -> String {
    serde_json::to_string(&mw_doc(r)).expect("serializable")
}

/// Parses a report; the verdicts are recomputed and must match the stored ones.
pub fn mw_from_json(text: &str) -> Result<MwReport, FormatError> {
    let doc: MwDoc = serde_json::from_str(text)?;
    expect_format(&doc.format, MW_FORMAT)?;
    let r = MwReport::from_evaluations(
        doc.n,
        doc.rank,
        parse_big(&doc.t20)?,
        parse_big(&doc.t02)?,
        parse_big(&doc.t11)?,
    );
    if (r.max_ok, r.add_ok, r.mult_ok) != (doc.max, doc.add, doc.mult) {
        return Err(FormatError::BadInteger(
            "stored verdicts disagree with the evaluations".into(),
        ));
    }
    Ok(r)
}

#[derive(Serialize)]
struct FlatEntry {
    set: Vec<usize>,
    rank: usize,
}

#[derive(Serialize)]
struct CyclicFlatsDoc {
    format: &'static str,
    flats: Vec<FlatEntry>,
    proper_antichain: bool,
    connected_split: bool,
    split: bool,
    paving: bool,
    copaving: bool,
}

pub fn cyclic_flats_to_json(r: &CyclicFlatReport) -> String {
    serde_json::to_string(&CyclicFlatsDoc {
        format: CYCLIC_FLATS_FORMAT,
        flats: r
            .flats
            .iter()
            .map(|f| FlatEntry {
                set: f.set.to_vec(),
                rank: f.rank,
            })
            .collect(),
        proper_antichain: r.is_antichain,
        connected_split: r.is_connected_split,
        split: r.is_split,
        paving: r.is_paving,
        copaving: r.is_copaving,
    })
    .expect("serializable")
}

fn node_value(node: &ProofNode) -> Value {
    json!({
        "format": TRACE_FORMAT,
        "rule": node.rule.label(),
        "digest": node.digest,
        "matroid": matroid_value(&node.matroid),
        "mw": mw_value(&node.mw),
        "failures": node.failures,
        "children": node.children.iter().map(node_value).collect::<Vec<_>>(),
    })
}

pub fn trace_value(t: &ProofTrace) -> Value {
    let mut v = node_value(&t.root);
    v["verified"] = Value::Bool(t.verified);
    v
}

pub fn trace_to_json(t: &ProofTrace) -> String {
    trace_value(t).to_string()
}

/// Summary record closing one census in a line-delimited stream.
pub fn census_summary_json(c: &Rank2Census) -> String {
    json!({
        "format": CENSUS_FORMAT,
        "n": c.n,
        "partitions": c.class_size_multisets,
        "count": c.reports.len(),
        "all_pass": c.all_pass,
    })
    .to_string()
}
