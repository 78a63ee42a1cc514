//! Wire formats: graph JSON, Gram JSON, frame-report and classification
//! JSON, and the table CSV.
//!
//! Scalars travel as strings in the grammar of [`crate::scalar`] so that
//! exact values survive the round trip.  Field order is fixed by struct
//! declaration order; identical inputs produce byte-identical output.

use serde::{Deserialize, Serialize};

use crate::construct::{Classification, FrameTag, TableRow};
use crate::embed::GramSet;
use crate::error::{Error, Result};
use crate::frames::{DesignKind, FrameReport, LrsOutcome};
use crate::matrix::Matrix;
use crate::scalar::{Mode, Scalar};
use crate::srg::{Adjacency, SrgGraph, SrgParams};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    v: usize,
    edges: Vec<(usize, usize)>,
}

/// Graph JSON: `{"v": int, "edges": [[i,j],...]}`, 0-based `i < j`, sorted.
pub fn graph_to_json(g: &SrgGraph) -> String {
    let doc = GraphJson { v: g.params().v, edges: g.adjacency().edges() };
    serde_json::to_string(&doc).expect("graph serialization cannot fail")
}

/// Parses an adjacency structure without certifying strong regularity.
pub fn adjacency_from_json(s: &str) -> Result<Adjacency> {
    let doc: GraphJson =
        serde_json::from_str(s).map_err(|e| Error::Unsupported(format!("malformed graph JSON: {e}")))?;
    let mut adj = Adjacency::new(doc.v)?;
    for (i, j) in doc.edges {
        if i >= j || j >= doc.v {
            return Err(Error::Unsupported(format!(
                "edge ({i},{j}) is not a sorted pair of vertices below {}",
                doc.v
            )));
        }
        adj.add_edge(i, j);
    }
    Ok(adj)
}

/// Parses and certifies a graph; the adjacency must be strongly regular.
pub fn graph_from_json(s: &str) -> Result<SrgGraph> {
    SrgGraph::from_adjacency(adjacency_from_json(s)?)
}

#[derive(Serialize, Deserialize)]
struct GramJson {
    n_rank: usize,
    #[serde(rename = "N")]
    n_vectors: usize,
    entries: Vec<Vec<String>>,
}

/// Gram JSON: `{"n_rank": int, "N": int, "entries": [[scalar,...],...]}`.
pub fn gram_to_json(g: &GramSet) -> String {
    let entries = (0..g.len())
        .map(|i| (0..g.len()).map(|j| g.matrix().get(i, j).to_string()).collect())
        .collect();
    let doc = GramJson { n_rank: g.rank(), n_vectors: g.len(), entries };
    serde_json::to_string(&doc).expect("gram serialization cannot fail")
}

/// Parses the matrix of a Gram JSON document without certifying it
/// (classification handles non-PSD inputs itself).  Returns the matrix and
/// the declared rank.
pub fn gram_matrix_from_json(s: &str) -> Result<(Matrix, usize)> {
    let doc: GramJson =
        serde_json::from_str(s).map_err(|e| Error::Unsupported(format!("malformed Gram JSON: {e}")))?;
    let n = doc.n_vectors;
    if doc.entries.len() != n || doc.entries.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch(format!("expected {n} rows of {n} entries")));
    }
    let mut parsed: Vec<Scalar> = Vec::with_capacity(n * n);
    for row in &doc.entries {
        for e in row {
            parsed.push(e.parse()?);
        }
    }
    let m = Matrix::from_fn(n, n, |i, j| parsed[i * n + j].clone());
    Ok((m, doc.n_rank))
}

/// Parses and fully certifies a Gram JSON document; the declared rank must
/// match the factorization certificate.
pub fn gram_from_json(s: &str, mode: Mode) -> Result<GramSet> {
    let (m, declared) = gram_matrix_from_json(s)?;
    let gram = GramSet::new(m, mode)?;
    if gram.rank() != declared {
        return Err(Error::VerificationFailed(format!(
            "declared rank {declared} disagrees with certified rank {}",
            gram.rank()
        )));
    }
    Ok(gram)
}

fn scalar_opt(s: &Option<Scalar>) -> Option<String> {
    s.as_ref().map(|x| x.to_string())
}

/// JSON form of a frame report.  `lrs_k` is the found integer or null;
/// non-applicability reasons and violations land in `flags`.
#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ReportJson {
    #[serde(rename = "N")]
    pub n_vectors: usize,
    pub n: Option<usize>,
    pub tight: bool,
    #[serde(rename = "A")]
    pub frame_constant: Option<String>,
    pub fp: String,
    pub a: Option<String>,
    pub b: Option<String>,
    #[serde(rename = "N_a")]
    pub n_a: Option<usize>,
    pub t: Option<String>,
    pub design: DesignKind,
    pub lrs_k: Option<u64>,
    pub equiangular: bool,
    pub srg: Option<SrgParams>,
    pub flags: Vec<String>,
}

impl From<&FrameReport> for ReportJson {
    fn from(r: &FrameReport) -> ReportJson {
        let mut flags = r.flags.clone();
        let lrs_k = match &r.lrs {
            Some(LrsOutcome::Satisfied { k }) => Some(*k),
            Some(LrsOutcome::NotApplicable { reason }) => {
                flags.push(format!("lrs-not-applicable: {reason}"));
                None
            }
            Some(LrsOutcome::Violated) => {
                flags.push("lrs-violated".to_string());
                None
            }
            None => None,
        };
        ReportJson {
            n_vectors: r.n_vectors,
            n: r.rank,
            tight: r.tight,
            frame_constant: scalar_opt(&r.frame_constant),
            fp: r.frame_potential.to_string(),
            a: scalar_opt(&r.a),
            b: scalar_opt(&r.b),
            n_a: r.n_a,
            t: scalar_opt(&r.t),
            design: r.design,
            lrs_k,
            equiangular: r.equiangular,
            srg: r.srg,
            flags,
        }
    }
}

pub fn report_to_json(r: &FrameReport) -> String {
    serde_json::to_string(&ReportJson::from(r)).expect("report serialization cannot fail")
}

pub fn report_from_json(s: &str) -> Result<ReportJson> {
    serde_json::from_str(s).map_err(|e| Error::Unsupported(format!("malformed report JSON: {e}")))
}

#[derive(Serialize, Deserialize, Debug)]
pub struct ClassificationJson {
    pub tag: FrameTag,
    pub srg: Option<SrgParams>,
    pub report: ReportJson,
}

pub fn classification_to_json(c: &Classification) -> String {
    let doc = ClassificationJson { tag: c.tag, srg: c.srg, report: ReportJson::from(&c.report) };
    serde_json::to_string(&doc).expect("classification serialization cannot fail")
}

pub fn classification_from_json(s: &str) -> Result<ClassificationJson> {
    serde_json::from_str(s)
        .map_err(|e| Error::Unsupported(format!("malformed classification JSON: {e}")))
}

pub const TABLE_CSV_HEADER: &str = "srg_v,srg_k,srg_lambda,srg_mu,kind,n,N,N_a,a,b,flags";

/// Table CSV, one row per two-distance frame.
pub fn table_to_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(TABLE_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.srg.v,
            r.srg.k,
            r.srg.lambda,
            r.srg.mu,
            r.kind,
            r.n,
            r.n_vectors,
            r.n_a,
            r.a,
            r.b,
            r.flags.join(";")
        ));
    }
    out
}
