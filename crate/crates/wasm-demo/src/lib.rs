//! Browser bindings for the interactive demo page.
//!
//! Three operations, each string-in / JSON-string-out so the page needs no
//! generated TypeScript: equation analysis (regularity, forbidden ratios,
//! linkage), a radius scan that yields one least solution-free coloring per
//! interval length, and a monochromatic-solution finder over a user-edited
//! coloring. Inputs are capped to keep every call comfortably interactive.

use wasm_bindgen::prelude::*;

use serde_json::{json, Value};

use rado_core::algebra::{forbidden_ratios, normalize, parse_coeffs, zero_sum_subset, Equation};
use rado_core::coloring::{search_coloring, verify_coloring, Coloring, VerifyOutcome};
use rado_core::linkage::{linkage_search, max_linkage};
use rado_core::strong::{strong_solve, InequalitySystem};

const MAX_ARITY: usize = 6;
const MAX_SCAN_CAP: u32 = 60;
const MAX_SCAN_COLORS: u32 = 4;
const MAX_COLORING_LEN: usize = 400;
const LINKAGE_CAP: usize = 6;

fn err(msg: impl Into<String>) -> String {
    json!({ "error": msg.into() }).to_string()
}

fn parse_equation(coeffs: &str) -> Result<Equation, String> {
    let raw = parse_coeffs(coeffs).map_err(|e| e.to_string())?;
    let eq = normalize(&raw).map_err(|e| e.to_string())?;
    if eq.arity() > MAX_ARITY {
        return Err(format!("demo supports up to {MAX_ARITY} variables"));
    }
    Ok(eq)
}

fn equation_json(eq: &Equation) -> Value {
    Value::Array(
        eq.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

/// Canonical form, Rado regularity, forbidden ratios, and the best linkage
/// certificate up to size 6.
#[wasm_bindgen]
pub fn analyze(coeffs: &str) -> String {
    let eq = match parse_equation(coeffs) {
        Ok(eq) => eq,
        Err(e) => return err(e),
    };
    let subset = zero_sum_subset(&eq);
    let ratios: Vec<Value> = forbidden_ratios(&eq)
        .iter()
        .map(|s| Value::String(s.to_string()))
        .collect();
    let best = max_linkage(&eq, LINKAGE_CAP);
    let linkage = if best >= 1 {
        let mat = linkage_search(&eq, best).expect("max_linkage certified this size");
        json!({
            "m": best,
            "first_row": mat.first_row().iter().map(|e| e.ratio.to_string()).collect::<Vec<_>>(),
            "ratio_indices": mat.first_row().iter().map(|e| e.ratio_index).collect::<Vec<_>>(),
            "integrality_base": mat.integrality_base().to_string(),
        })
    } else {
        json!({ "m": 0 })
    };
    json!({
        "equation": equation_json(&eq),
        "regular": subset.is_some(),
        "witness_subset": subset,
        "ratios": ratios,
        "linkage": linkage,
        "linkage_cap": LINKAGE_CAP,
    })
    .to_string()
}

/// For each length `1..=cap`, the least solution-free `r`-coloring with
/// color(1) = 1, stopping at the first length where none exists (the
/// radius).
#[wasm_bindgen]
pub fn radius_scan(coeffs: &str, r: u32, cap: u32) -> String {
    let eq = match parse_equation(coeffs) {
        Ok(eq) => eq,
        Err(e) => return err(e),
    };
    if !(1..=MAX_SCAN_COLORS).contains(&r) {
        return err(format!("palette size must be 1..={MAX_SCAN_COLORS}"));
    }
    if !(1..=MAX_SCAN_CAP).contains(&cap) {
        return err(format!("cap must be 1..={MAX_SCAN_CAP}"));
    }
    let mut lengths = Vec::new();
    let mut radius = None;
    for n in 1..=cap as usize {
        match search_coloring(&eq, r, n, &[]) {
            Some(col) => {
                lengths.push(json!({ "n": n, "colors": col.colors() }));
            }
            None => {
                radius = Some(n);
                break;
            }
        }
    }
    json!({
        "equation": equation_json(&eq),
        "r": r,
        "cap": cap,
        "radius": radius,
        "lengths": lengths,
    })
    .to_string()
}

/// Monochromatic solution (optionally with all entries distinct) under the
/// coloring given in the text file format `N r` + colors.
#[wasm_bindgen]
pub fn monochromatic_solution(coeffs: &str, coloring_text: &str, distinct: bool) -> String {
    let eq = match parse_equation(coeffs) {
        Ok(eq) => eq,
        Err(e) => return err(e),
    };
    let col = match Coloring::parse(coloring_text) {
        Ok(col) => col,
        Err(e) => return err(e.to_string()),
    };
    if col.n() > MAX_COLORING_LEN {
        return err(format!("demo colorings are capped at {MAX_COLORING_LEN}"));
    }
    let system = if distinct {
        InequalitySystem::distinct_pairs(eq.arity())
    } else {
        InequalitySystem::empty()
    };
    if let Err(e) = system.validate_against(&eq) {
        return err(e.to_string());
    }
    let solution = match strong_solve(&eq, &system, &col) {
        Ok(s) => s,
        Err(e) => return err(e.to_string()),
    };
    let valid = matches!(
        verify_coloring(&eq, &col, system.rows()),
        VerifyOutcome::Valid
    );
    let solution_json = solution.map(|tuple| {
        let entries: Vec<usize> = tuple
            .values()
            .iter()
            .map(|v| v.to_string().parse().expect("entry fits interval"))
            .collect();
        let color = col.color(entries[0]);
        json!({ "entries": entries, "color": color })
    });
    json!({
        "equation": equation_json(&eq),
        "n": col.n(),
        "r": col.r(),
        "colors": col.colors(),
        "distinct": distinct,
        "solution_free": valid,
        "solution": solution_json,
    })
    .to_string()
}
