//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes plain text and returns a JSON string. The `*_json`
//! functions hold the logic and run natively too, which is how the tests
//! exercise them.

use ppt_core::{
    cohn_lempel_check, overlap_graph, pivot_orbit, q_from_q_prime, q_prime_direct, q_recursive, trace_partition,
    DoubleOccurrenceString, Graph, Subset,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest graph the page will pivot or expand.
pub const MAX_DEMO_VERTICES: usize = 16;

#[derive(Serialize)]
struct GraphView {
    labels: Vec<String>,
    edges: Vec<[String; 2]>,
    loops: Vec<String>,
    text: String,
}

impl GraphView {
    fn of(g: &Graph) -> Self {
        let d = g.domain();
        let mut edges = Vec::new();
        let mut loops = Vec::new();
        for (u, v) in g.edges() {
            if u == v {
                loops.push(d.label(u).to_string());
            } else {
                edges.push([d.label(u).to_string(), d.label(v).to_string()]);
            }
        }
        GraphView { labels: d.labels().to_vec(), edges, loops, text: g.to_string() }
    }
}

#[derive(Serialize)]
struct PivotResult {
    before: GraphView,
    after: GraphView,
    elementary_steps: Vec<String>,
    orbit_size: usize,
}

#[derive(Serialize)]
struct InterlaceResult {
    q_prime: Vec<String>,
    q: Vec<String>,
    q_prime_text: String,
    q_text: String,
    methods_agree: bool,
}

#[derive(Serialize)]
struct WalkResult {
    overlap: GraphView,
    walks: Vec<String>,
    nullity_plus_one: usize,
}

fn parse_graph(text: &str) -> Result<Graph, String> {
    let g = Graph::parse(text).map_err(|e| e.to_string())?;
    if g.size() > MAX_DEMO_VERTICES {
        return Err(format!("the demo accepts at most {MAX_DEMO_VERTICES} vertices"));
    }
    Ok(g)
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

/// Pivots a graph on a comma-separated label list.
pub fn pivot_graph_json(graph: &str, labels: &str) -> Result<String, String> {
    let g = parse_graph(graph)?;
    let x = Subset::parse(g.domain(), labels).map_err(|e| e.to_string())?;
    let steps = ppt_core::elementary_decomposition(&g, &x).map_err(|e| e.to_string())?;
    let after = steps.iter().try_fold(g.clone(), |h, s| h.elementary_pivot(s)).map_err(|e| e.to_string())?;
    let orbit_size = if g.size() <= 8 { pivot_orbit(&g).map_err(|e| e.to_string())?.graphs.len() } else { 0 };
    to_json(&PivotResult {
        before: GraphView::of(&g),
        after: GraphView::of(&after),
        elementary_steps: steps.iter().map(|s| format!("*{s}")).collect(),
        orbit_size,
    })
}

/// Interlace polynomials of a graph, by subset enumeration and by recursion.
pub fn interlace_json(graph: &str) -> Result<String, String> {
    let g = parse_graph(graph)?;
    let q_prime = q_prime_direct(&g.to_matrix()).map_err(|e| e.to_string())?;
    let q = q_from_q_prime(&q_prime);
    let coeffs = |p: &ppt_core::IntPolynomial| p.coefficients().iter().map(ToString::to_string).collect();
    to_json(&InterlaceResult {
        q_prime: coeffs(&q_prime),
        q: coeffs(&q),
        q_prime_text: q_prime.to_string(),
        q_text: q.to_string(),
        methods_agree: q_recursive(&g) == q,
    })
}

/// Closed walks of a double occurrence string after switching at `flip`.
pub fn trace_walks_json(dos: &str, flip: &str) -> Result<String, String> {
    let s = DoubleOccurrenceString::parse(dos).map_err(|e| e.to_string())?;
    let x = Subset::parse(s.domain(), flip).map_err(|e| e.to_string())?;
    let partition = trace_partition(&s, &x).map_err(|e| e.to_string())?;
    let sep = if s.letters().iter().any(|l| l.chars().count() > 1) { " " } else { "" };
    let walks = partition
        .walks
        .iter()
        .map(|w| w.iter().map(|&a| s.letters()[a].as_str()).collect::<Vec<_>>().join(sep))
        .collect();
    let (_, nullity_plus_one) = cohn_lempel_check(&s, &x).map_err(|e| e.to_string())?;
    to_json(&WalkResult { overlap: GraphView::of(&overlap_graph(&s)), walks, nullity_plus_one })
}

#[wasm_bindgen]
pub fn pivot_graph(graph: &str, labels: &str) -> Result<String, JsError> {
    pivot_graph_json(graph, labels).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn interlace(graph: &str) -> Result<String, JsError> {
    interlace_json(graph).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn trace_walks(dos: &str, flip: &str) -> Result<String, JsError> {
    trace_walks_json(dos, flip).map_err(|e| JsError::new(&e))
}
