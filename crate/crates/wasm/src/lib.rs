//! Browser bindings: render a coloring window, search it for a
//! monochromatic configuration and audit bad sets. Every function takes a
//! coloring spec such as `power2:1,2` and returns a JSON string.

use serde_json::json;
use sumset_ramsey::poly::parse_poly_list;
use sumset_ramsey::search::{
    bad_sets_all_colors, greedy_search, verify_config, AuditReport, GreedyOptions,
};
use sumset_ramsey::Coloring;
use wasm_bindgen::prelude::*;

/// Largest window the page may request; keeps the tab responsive.
pub const MAX_WINDOW: usize = 1_000_000;
/// Recursive colorings are materialized up to this bound.
const RECURSIVE_WINDOW: u64 = 10_000_000;

fn coloring(spec: &str) -> Result<Coloring, String> {
    let mut d = sumset_ramsey::coloring::parse_coloring_spec(spec).map_err(|e| e.to_string())?;
    if d.kind() == "file" {
        return Err("file colorings are not available in the browser".into());
    }
    if d.kind() == "recursive" && d.get("window").is_none() {
        d.set("window", RECURSIVE_WINDOW);
    }
    Coloring::from_descriptor(&d).map_err(|e| e.to_string())
}

fn checked_window(n: usize) -> Result<usize, String> {
    if n == 0 || n > MAX_WINDOW {
        return Err(format!("N must lie in 1..={MAX_WINDOW}"));
    }
    Ok(n)
}

/// `{"coloring", "palette", "colors"}` for `1..=n`.
pub fn color_window_json(spec: &str, n: usize) -> Result<String, String> {
    let c = coloring(spec)?;
    let n = checked_window(n)?;
    Ok(json!({
        "coloring": c.descriptor().to_string(),
        "palette": c.palette(),
        "colors": c.colors(1, n),
    })
    .to_string())
}

/// Greedy search for `(B, C)` with `|B| = r` and `|C| <= max_c`.
pub fn search_json(
    spec: &str,
    n: usize,
    polys: &str,
    r: usize,
    max_c: usize,
) -> Result<String, String> {
    let c = coloring(spec)?;
    let n = checked_window(n)?;
    let ps = parse_poly_list(polys).map_err(|e| e.to_string())?;
    let opts = GreedyOptions {
        stride: 1,
        max_candidates: Some(512),
    };
    let found = greedy_search(&c.window(n), &ps, r, max_c, &opts).map_err(|e| e.to_string())?;
    let cfg = &found.config;
    Ok(json!({
        "coloring": c.descriptor().to_string(),
        "N": n,
        "polys": ps.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "color": cfg.color,
        "B": cfg.b,
        "C": cfg.c,
        "points": cfg.points().unwrap_or_default(),
        "survivors": found.survivors,
        "verified": verify_config(&c, cfg) == Some(cfg.color),
    })
    .to_string())
}

/// Audit reports for `n = 1..=n_max` and every color.
pub fn audit_json(spec: &str, polys: &str, n_max: u64, horizon: u64) -> Result<String, String> {
    let c = coloring(spec)?;
    let ps = parse_poly_list(polys).map_err(|e| e.to_string())?;
    if n_max == 0 || n_max > 100 || horizon > 1_000_000 {
        return Err("need 1 <= n <= 100 and M <= 10^6".into());
    }
    let mut reports = Vec::new();
    for n in 1..=n_max {
        let sets = bad_sets_all_colors(&c, n, &ps, horizon).map_err(|e| e.to_string())?;
        for (i, s) in sets.iter().enumerate() {
            reports.push(AuditReport::from_set(n, i as u8 + 1, s, horizon));
        }
    }
    serde_json::to_string(&reports).map_err(|e| e.to_string())
}

#[wasm_bindgen]
pub fn color_window(spec: &str, n: usize) -> Result<String, JsError> {
    color_window_json(spec, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn search(
    spec: &str,
    n: usize,
    polys: &str,
    r: usize,
    max_c: usize,
) -> Result<String, JsError> {
    search_json(spec, n, polys, r, max_c).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn audit(spec: &str, polys: &str, n_max: u32, horizon: u32) -> Result<String, JsError> {
    audit_json(spec, polys, n_max.into(), horizon.into()).map_err(|e| JsError::new(&e))
}
