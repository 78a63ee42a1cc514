//! Browser bindings for the frame explorer demo.
//!
//! Three operations back the static page in `www/`: the exact feasibility
//! triangle of a graph, a membership probe of an inner-product pair, and the
//! six tight frames with their verification reports.  All responses are JSON
//! strings; exact values travel as strings in the scalar grammar, with float
//! approximations alongside for drawing.

use wasm_bindgen::prelude::*;

use tdframe::construct::{classify, six_frames};
use tdframe::embed::{feasible_region, mixed_gram, psd_probe, weights_for};
use tdframe::io;
use tdframe::scalar::{Mode, Scalar};
use tdframe::srg::{self, SrgGraph};

fn load_graph(family: &str, size: usize) -> Result<SrgGraph, JsValue> {
    let g = match family {
        "clebsch-complement" => srg::clebsch_complement(),
        name => srg::Family::parse(name).and_then(|f| srg::generate(f, size)),
    };
    g.map_err(|e| JsValue::from_str(&e.to_string()))
}

fn pair_json(p: &(Scalar, Scalar)) -> serde_json::Value {
    serde_json::json!({
        "exact": [p.0.to_string(), p.1.to_string()],
        "float": [p.0.to_f64(), p.1.to_f64()],
    })
}

/// Feasibility triangle of a graph: vertices (exact and float), constraint
/// lines, parameters and spectrum.
#[wasm_bindgen]
pub fn region_json(family: &str, size: usize) -> Result<String, JsValue> {
    let g = load_graph(family, size)?;
    let region = feasible_region(&g).map_err(|e| JsValue::from_str(&e.to_string()))?;
    let p = g.params();
    let sp = g.spectrum().map_err(|e| JsValue::from_str(&e.to_string()))?;
    let doc = serde_json::json!({
        "params": {"v": p.v, "k": p.k, "lambda": p.lambda, "mu": p.mu},
        "spectrum": {
            "r1": sp.r1.to_string(), "r2": sp.r2.to_string(),
            "n1": sp.n1, "n2": sp.n2,
        },
        "vertices": region.vertices.iter().map(pair_json).collect::<Vec<_>>(),
        "lines": region.lines.iter().map(|(c, ca, cb)| serde_json::json!({
            "exact": [c.to_string(), ca.to_string(), cb.to_string()],
            "float": [c.to_f64(), ca.to_f64(), cb.to_f64()],
        })).collect::<Vec<_>>(),
    });
    Ok(doc.to_string())
}

/// Probes an exact point `(a, b)` (scalar grammar strings): triangle
/// membership, the independent factorization oracle, mixing weights and the
/// rank of the resulting Gram.
#[wasm_bindgen]
pub fn probe_json(family: &str, size: usize, a: &str, b: &str) -> Result<String, JsValue> {
    let g = load_graph(family, size)?;
    let err = |e: tdframe::Error| JsValue::from_str(&e.to_string());
    let a: Scalar = a.parse().map_err(err)?;
    let b: Scalar = b.parse().map_err(err)?;
    let region = feasible_region(&g).map_err(err)?;
    let inside = region.contains(&a, &b).map_err(err)?;
    let (psd, psd_rank) = psd_probe(&g, &a, &b).map_err(err)?;
    let weights = weights_for(&g, &a, &b).ok();
    let rank = weights.as_ref().and_then(|w| mixed_gram(&g, w).ok().map(|m| m.rank()));
    let doc = serde_json::json!({
        "point": pair_json(&(a, b)),
        "inside": inside,
        "psd": psd,
        "oracles_agree": inside == psd,
        "rank": rank.or(psd_rank),
        "weights": weights.map(|w| vec![w.w0.to_string(), w.w1.to_string(), w.w2.to_string()]),
    });
    Ok(doc.to_string())
}

/// The six tight frames of a graph with classification tags and reports.
#[wasm_bindgen]
pub fn six_json(family: &str, size: usize) -> Result<String, JsValue> {
    let g = load_graph(family, size)?;
    let frames = six_frames(&g).map_err(|e| JsValue::from_str(&e.to_string()))?;
    let docs: Vec<serde_json::Value> = frames
        .iter()
        .map(|(gram, class)| {
            serde_json::json!({
                "tag": class.tag,
                "srg": class.srg,
                "n": gram.rank(),
                "N": gram.len(),
                "report": serde_json::from_str::<serde_json::Value>(
                    &io::report_to_json(&class.report)).unwrap(),
            })
        })
        .collect();
    Ok(serde_json::to_string(&docs).unwrap())
}

/// Classifies a Gram JSON document (same schema as the CLI).
#[wasm_bindgen]
pub fn classify_json(gram: &str) -> Result<String, JsValue> {
    let (matrix, _) = io::gram_matrix_from_json(gram).map_err(|e| JsValue::from_str(&e.to_string()))?;
    let class =
        classify(&matrix, Mode::Exact).map_err(|e| JsValue::from_str(&e.to_string()))?;
    Ok(io::classification_to_json(&class))
}
