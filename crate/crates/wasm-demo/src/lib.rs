//! Browser bindings for three read-only views of an enhanced power graph:
//! the graph itself, its Laplacian spectrum, and the detour profile of one
//! vertex. Each view is a pure function returning JSON so it can be tested
//! natively; the `#[wasm_bindgen]` wrappers only turn errors into strings.

use epglab::cli::GroupSpec;
use epglab::epg::enhanced_power_graph;
use epglab::metric::{detour_rows, DEFAULT_DETOUR_CAP};
use epglab::spectra::{
    closed_form_spectrum, integer_spectrum, laplacian_charpoly, spanning_tree_count, spectrum_json,
    SpectrumFamily,
};
use epglab::SimpleGraph;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Browsers get a smaller ceiling than the CLI; everything here runs on
/// the page's main thread.
const MAX_ORDER: usize = 64;

fn build(spec: &str) -> Result<(GroupSpec, SimpleGraph), String> {
    let spec: GroupSpec = spec.trim().parse().map_err(|e| format!("{e}"))?;
    if let GroupSpec::File(_) = spec {
        return Err("file specs are not available in the browser".into());
    }
    let group = spec.build().map_err(|e| e.to_string())?;
    if group.order() > MAX_ORDER {
        return Err(format!(
            "order {} is above the demo limit of {MAX_ORDER}",
            group.order()
        ));
    }
    Ok((spec, enhanced_power_graph(&group)))
}

pub fn graph_view(spec: &str) -> Result<String, String> {
    let (_, g) = build(spec)?;
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    Ok(json!({
        "labels": g.labels(),
        "edges": edges,
        "degrees": g.degrees(),
    })
    .to_string())
}

pub fn spectrum_view(spec: &str) -> Result<String, String> {
    let (spec, g) = build(spec)?;
    let cap = g.vcount();
    let poly = laplacian_charpoly(&g, cap).map_err(|e| e.to_string())?;
    let s = integer_spectrum(&g, cap).map_err(|e| e.to_string())?;
    let trees = spanning_tree_count(&g, cap).map_err(|e| e.to_string())?;
    let (family, n) = match spec {
        GroupSpec::Semidihedral(n) => (SpectrumFamily::Semidihedral, n),
        GroupSpec::Quaternion(n) => (SpectrumFamily::Quaternion, n),
        GroupSpec::Dihedral(n) => (SpectrumFamily::Dihedral, n),
        GroupSpec::File(_) => unreachable!("rejected in build"),
    };
    let closed = closed_form_spectrum(family, n).map_err(|e| e.to_string())?;
    let mut out = spectrum_json(&poly, &s, &trees);
    out["matches_closed_form"] = json!(closed.polynomial() == poly);
    Ok(out.to_string())
}

pub fn detour_view(spec: &str, vertex: usize) -> Result<String, String> {
    let (_, g) = build(spec)?;
    if vertex >= g.vcount() {
        return Err(format!("vertex {vertex} out of range 0..{}", g.vcount()));
    }
    let row = detour_rows(&g, &[vertex], DEFAULT_DETOUR_CAP)
        .map_err(|e| e.to_string())?
        .remove(0);
    let ecc = row.iter().flatten().copied().max().unwrap_or(0);
    let mut dds = vec![0usize; ecc as usize + 1];
    for d in row.iter().flatten() {
        dds[*d as usize] += 1;
    }
    Ok(json!({
        "vertex": g.label(vertex),
        "distances": row,
        "eccentricity": ecc,
        "dds": dds,
    })
    .to_string())
}

#[wasm_bindgen(js_name = graphView)]
pub fn graph_view_js(spec: &str) -> Result<String, JsError> {
    graph_view(spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = spectrumView)]
pub fn spectrum_view_js(spec: &str) -> Result<String, JsError> {
    spectrum_view(spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = detourView)]
pub fn detour_view_js(spec: &str, vertex: usize) -> Result<String, JsError> {
    detour_view(spec, vertex).map_err(|e| JsError::new(&e))
}
