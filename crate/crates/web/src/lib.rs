//! Browser bindings. Each export takes a family spec (`cycle:8`) or the
//! text of an edge list and returns a JSON string; errors come back as a
//! rejected string. All enumeration runs on the calling thread.

use serde::Serialize;
use vat_core::metrics::{self, Enumeration, MetricResult};
use vat_core::verifier::{run_suite, Check, SuiteOptions, VerifyOptions};
use vat_core::{io, spectral, FamilySpec, Fraction, Graph, VertexSet};
use wasm_bindgen::prelude::*;

/// Largest graph the page will enumerate exactly.
pub const WEB_LIMIT: usize = 20;

fn enumeration() -> Enumeration {
    Enumeration::with_limit(WEB_LIMIT).sequential()
}

fn load(input: &str) -> Result<(String, Graph), String> {
    let input = input.trim();
    if input.contains('\n') || input.starts_with(|c: char| c.is_ascii_digit() || c == '#') {
        let g = io::parse_edge_list(input).map_err(|e| e.to_string())?;
        return Ok(("edge list".into(), g));
    }
    let spec: FamilySpec = input.parse().map_err(|e: vat_core::Error| e.to_string())?;
    let g = spec.build().map_err(|e| e.to_string())?;
    Ok((spec.to_string(), g))
}

fn json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Attack {
    value: Fraction,
    witness: VertexSet,
    /// largest component left after removing the witness
    largest: VertexSet,
}

#[derive(Serialize)]
struct Cut {
    value: Fraction,
    witness: VertexSet,
    exact: bool,
}

#[derive(Serialize)]
struct Analysis {
    graph_id: String,
    n: usize,
    m: usize,
    d: Option<usize>,
    edges: Vec<(usize, usize)>,
    /// unit-circle positions, vertex 0 at the top
    layout: Vec<(f64, f64)>,
    vat: Option<Attack>,
    conductance: Option<Cut>,
    lambda2: Option<f64>,
    gap: Option<f64>,
    note: Option<String>,
}

fn circle(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n as f64 - std::f64::consts::FRAC_PI_2;
            (t.cos(), t.sin())
        })
        .collect()
}

fn attack(g: &Graph, r: MetricResult) -> Attack {
    let (largest, _) = metrics::vat_witness_components(g, &r);
    Attack { value: r.value, witness: r.witness, largest }
}

/// τ, Φ and λ₂ with witnesses and a drawing layout. Past the exact limit
/// τ is omitted and Φ is replaced by the spectral sweep cut.
pub fn analyze_json(input: &str) -> Result<String, String> {
    let (graph_id, g) = load(input)?;
    if !g.is_connected() {
        return Err("graph is disconnected".into());
    }
    let opts = enumeration();
    let exact = g.n() <= WEB_LIMIT;
    let spec = spectral::lambda2(&g).ok();
    let (vat, conductance, note) = if exact {
        let t = metrics::vat_exact_with(&g, &opts).map_err(|e| e.to_string())?;
        let p = metrics::conductance_exact_with(&g, &opts).map_err(|e| e.to_string())?;
        (Some(attack(&g, t)), Some(Cut { value: p.value, witness: p.witness, exact: true }), None)
    } else {
        let sweep = spec.as_ref().map(|s| spectral::sweep_from_vector(&g, &s.eigenvector));
        let cut = sweep.map(|s| Cut { value: s.value, witness: s.witness, exact: false });
        (None, cut, Some(format!("n > {WEB_LIMIT}: exact τ skipped, Φ is a sweep-cut upper bound")))
    };
    json(&Analysis {
        graph_id,
        n: g.n(),
        m: g.m(),
        d: g.regularity(),
        edges: g.edges().collect(),
        layout: circle(g.n()),
        vat,
        conductance,
        lambda2: spec.as_ref().map(|s| s.lambda2),
        gap: spec.as_ref().map(|s| s.gap),
        note,
    })
}

/// Every inequality check on one graph.
pub fn verify_json(input: &str) -> Result<String, String> {
    let (id, g) = load(input)?;
    if g.n() > WEB_LIMIT {
        return Err(format!("graph has {} vertices, the page enumerates at most {WEB_LIMIT}", g.n()));
    }
    let opts = SuiteOptions {
        verify: VerifyOptions { enumeration: enumeration(), ..VerifyOptions::default() },
        parallel: false,
        ..SuiteOptions::default()
    };
    json(&run_suite(&[(id, g)], &Check::ALL, &opts))
}

#[derive(Serialize)]
struct AlphaBeta {
    alpha: f64,
    beta: f64,
    value: f64,
    exact: Option<Fraction>,
    witness: VertexSet,
    largest: VertexSet,
}

/// (α,β)-VAT: `(α|S| + β) / (|V - S - C_max| + 1)` minimized over `S`.
pub fn alpha_beta_json(input: &str, alpha: f64, beta: f64) -> Result<String, String> {
    let (_, g) = load(input)?;
    let w = metrics::alpha_beta_vat_exact_with(&g, alpha, beta, &enumeration()).map_err(|e| e.to_string())?;
    let largest = g.largest_component(&w.witness).map_err(|e| e.to_string())?;
    json(&AlphaBeta { alpha, beta, value: w.value, exact: w.exact, witness: w.witness, largest })
}

#[wasm_bindgen]
pub fn analyze(input: &str) -> Result<String, String> {
    analyze_json(input)
}

#[wasm_bindgen]
pub fn verify(input: &str) -> Result<String, String> {
    verify_json(input)
}

#[wasm_bindgen]
pub fn alpha_beta(input: &str, alpha: f64, beta: f64) -> Result<String, String> {
    alpha_beta_json(input, alpha, beta)
}
