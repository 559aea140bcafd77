//! Re-verifiable JSON certificates.
//!
//! A certificate embeds the witness itself (coloring arrays, solution
//! tuples, linkage first rows with ratio indices), not just the verdict,
//! so an independent checker can confirm it without repeating the search.
//! All numbers are exact decimal or `p/q` fraction strings.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::str::FromStr;
use thiserror::Error;

use rado_core::algebra::{
    check_solution, forbidden_ratio_solution, forbidden_ratios, normalize, rado_regular, Equation,
    Rational, SolutionTuple,
};
use rado_core::coloring::{search_coloring, verify_coloring, Coloring, RadiusOutcome};
use rado_core::linkage::{build_matrix, LinkageMatrix, WalkResult};

pub const SCHEMA: &str = "rado-certificate/1";

/// Radius certificates re-run the single boundary search during
/// verification only up to this length; the embedded witness is always
/// re-verified regardless.
pub const VERIFY_RADIUS_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertKind {
    Regularity,
    Ratios,
    Linkage,
    Radius,
    Coloring,
    Solution,
    Walk,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub kind: CertKind,
    pub equation: Vec<String>,
    pub payload: Value,
    pub meta: Meta,
}

#[derive(Debug, Error)]
pub enum CertError {
    #[error("unsupported schema `{0}`")]
    Schema(String),
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

fn malformed(msg: impl Into<String>) -> CertError {
    CertError::Malformed(msg.into())
}

fn equation_strings(eq: &Equation) -> Vec<String> {
    eq.coeffs().iter().map(|c| c.to_string()).collect()
}

fn string_array<T: ToString>(items: impl IntoIterator<Item = T>) -> Value {
    Value::Array(
        items
            .into_iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}

fn rows_json(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(rows.iter().map(|row| string_array(row.iter())).collect())
}

fn coloring_json(col: &Coloring) -> Value {
    json!({
        "n": col.n().to_string(),
        "r": col.r().to_string(),
        "colors": string_array(col.colors().iter()),
    })
}

pub fn regularity_cert(eq: &Equation, subset: Option<&[usize]>, meta: Meta) -> Certificate {
    let mut payload = json!({ "regular": subset.is_some() });
    if let Some(indices) = subset {
        payload["witness_subset"] = string_array(indices.iter());
    }
    Certificate {
        schema: SCHEMA.to_string(),
        kind: CertKind::Regularity,
        equation: equation_strings(eq),
        payload,
        meta,
    }
}

pub fn ratios_cert(eq: &Equation, ratios: &[Rational], meta: Meta) -> Certificate {
    Certificate {
        schema: SCHEMA.to_string(),
        kind: CertKind::Ratios,
        equation: equation_strings(eq),
        payload: json!({ "ratios": string_array(ratios.iter()) }),
        meta,
    }
}

pub fn linkage_cert(
    eq: &Equation,
    cap: usize,
    mat: Option<&LinkageMatrix>,
    meta: Meta,
) -> Certificate {
    let payload = match mat {
        Some(mat) => json!({
            "max_m": mat.size().to_string(),
            "cap": cap.to_string(),
            "first_row": string_array(mat.first_row().iter().map(|e| e.ratio.clone())),
            "ratio_indices": string_array(mat.first_row().iter().map(|e| e.ratio_index)),
            "integrality_base": mat.integrality_base().to_string(),
        }),
        None => json!({ "max_m": "0", "cap": cap.to_string() }),
    };
    Certificate {
        schema: SCHEMA.to_string(),
        kind: CertKind::Linkage,
        equation: equation_strings(eq),
        payload,
        meta,
    }
}

pub fn radius_cert(
    eq: &Equation,
    r: u32,
    cap: usize,
    outcome: &RadiusOutcome,
    ineqs: &[Vec<BigInt>],
    meta: Meta,
) -> Certificate {
    let payload = match outcome {
        RadiusOutcome::Radius { radius, witness } => json!({
            "r": r.to_string(),
            "cap": cap.to_string(),
            "outcome": "radius",
            "radius": radius.to_string(),
            "witness": coloring_json(witness),
            "ineqs": rows_json(ineqs),
        }),
        RadiusOutcome::Unknown { cap, witness } => json!({
            "r": r.to_string(),
            "cap": cap.to_string(),
            "outcome": "unknown",
            "witness": coloring_json(witness),
            "ineqs": rows_json(ineqs),
        }),
    };
    Certificate {
        schema: SCHEMA.to_string(),
        kind: CertKind::Radius,
        equation: equation_strings(eq),
        payload,
        meta,
    }
}

pub fn coloring_cert(
    eq: &Equation,
    r: u32,
    n: usize,
    ineqs: &[Vec<BigInt>],
    result: Option<&Coloring>,
    meta: Meta,
) -> Certificate {
    let payload = match result {
        Some(col) => json!({
            "r": r.to_string(),
            "n": n.to_string(),
            "found": true,
            "witness": coloring_json(col),
            "ineqs": rows_json(ineqs),
        }),
        None => json!({
            "r": r.to_string(),
            "n": n.to_string(),
            "found": false,
            "ineqs": rows_json(ineqs),
        }),
    };
    Certificate {
        schema: SCHEMA.to_string(),
        kind: CertKind::Coloring,
        equation: equation_strings(eq),
        payload,
        meta,
    }
}

pub fn solution_cert(
    eq: &Equation,
    ineqs: &[Vec<BigInt>],
    col: &Coloring,
    tuple: Option<(&SolutionTuple, u32)>,
    meta: Meta,
) -> Certificate {
    let payload = match tuple {
        Some((t, color)) => json!({
            "found": true,
            "tuple": string_array(t.values().iter()),
            "color": color.to_string(),
            "coloring": coloring_json(col),
            "ineqs": rows_json(ineqs),
        }),
        None => json!({
            "found": false,
            "coloring": coloring_json(col),
            "ineqs": rows_json(ineqs),
        }),
    };
    Certificate {
        schema: SCHEMA.to_string(),
        kind: CertKind::Solution,
        equation: equation_strings(eq),
        payload,
        meta,
    }
}

pub fn walk_cert(
    eq: &Equation,
    mat: &LinkageMatrix,
    col: &Coloring,
    x: &BigInt,
    res: &WalkResult,
    meta: Meta,
) -> Certificate {
    Certificate {
        schema: SCHEMA.to_string(),
        kind: CertKind::Walk,
        equation: equation_strings(eq),
        payload: json!({
            "x": x.to_string(),
            "first_row": string_array(mat.first_row().iter().map(|e| e.ratio.clone())),
            "pair": string_array([&res.pair.0, &res.pair.1]),
            "position": string_array([res.position.0, res.position.1]),
            "ratio": res.ratio.to_string(),
            "ratio_index": res.ratio_index.to_string(),
            "solution": string_array(res.solution.values().iter()),
            "color": res.color.to_string(),
            "coloring": coloring_json(col),
        }),
        meta,
    }
}

// ---------------------------------------------------------------------
// Verification

fn field<'a>(payload: &'a Value, key: &str) -> Result<&'a Value, CertError> {
    payload
        .get(key)
        .ok_or_else(|| malformed(format!("missing field `{key}`")))
}

fn str_field<'a>(payload: &'a Value, key: &str) -> Result<&'a str, CertError> {
    field(payload, key)?
        .as_str()
        .ok_or_else(|| malformed(format!("field `{key}` must be a string")))
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T, CertError> {
    s.parse()
        .map_err(|_| malformed(format!("bad {what} `{s}`")))
}

fn num_field<T: FromStr>(payload: &Value, key: &str) -> Result<T, CertError> {
    parse_num(str_field(payload, key)?, key)
}

fn string_list(payload: &Value, key: &str) -> Result<Vec<String>, CertError> {
    field(payload, key)?
        .as_array()
        .ok_or_else(|| malformed(format!("field `{key}` must be an array")))?
        .iter()
        .map(|v| {
            v.as_str()
                .map(str::to_string)
                .ok_or_else(|| malformed(format!("`{key}` entries must be strings")))
        })
        .collect()
}

fn parse_equation(cert: &Certificate) -> Result<Option<Equation>, CertError> {
    let raw: Vec<Rational> = cert
        .equation
        .iter()
        .map(|s| Rational::from_str(s).map_err(|_| malformed(format!("bad coefficient `{s}`"))))
        .collect::<Result<_, _>>()?;
    let eq = match normalize(&raw) {
        Ok(eq) => eq,
        Err(_) => return Ok(None),
    };
    // The embedded list must already be canonical.
    let canonical = eq
        .coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>();
    if canonical != cert.equation {
        return Ok(None);
    }
    Ok(Some(eq))
}

fn parse_coloring(value: &Value) -> Result<Option<Coloring>, CertError> {
    let n: usize = num_field(value, "n")?;
    let r: u32 = num_field(value, "r")?;
    let color_strings = string_list(value, "colors")?;
    if color_strings.len() != n {
        return Ok(None);
    }
    let mut colors = Vec::with_capacity(n);
    for s in &color_strings {
        colors.push(parse_num::<u32>(s, "color")?);
    }
    Ok(Coloring::new(r, colors).ok())
}

fn parse_rows(payload: &Value, key: &str) -> Result<Vec<Vec<BigInt>>, CertError> {
    match payload.get(key) {
        None => Ok(Vec::new()),
        Some(v) => v
            .as_array()
            .ok_or_else(|| malformed(format!("field `{key}` must be an array")))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| malformed("rows must be arrays"))?
                    .iter()
                    .map(|e| {
                        e.as_str()
                            .ok_or_else(|| malformed("row entries must be strings"))
                            .and_then(|s| parse_num::<BigInt>(s, "row entry"))
                    })
                    .collect()
            })
            .collect(),
    }
}

fn parse_bigints(payload: &Value, key: &str) -> Result<Vec<BigInt>, CertError> {
    string_list(payload, key)?
        .iter()
        .map(|s| parse_num::<BigInt>(s, key))
        .collect()
}

fn parse_rationals(payload: &Value, key: &str) -> Result<Vec<Rational>, CertError> {
    string_list(payload, key)?
        .iter()
        .map(|s| Rational::from_str(s).map_err(|_| malformed(format!("bad rational `{s}`"))))
        .collect()
}

fn monochromatic_color(col: &Coloring, values: &[BigInt]) -> Option<u32> {
    let mut color = None;
    for v in values {
        let pos: usize = v.to_string().parse().ok()?;
        let c = col.get(pos)?;
        match color {
            None => color = Some(c),
            Some(prev) if prev != c => return None,
            _ => {}
        }
    }
    color
}

/// Re-runs the cheap checks for a certificate: witness membership and
/// monochromaticity, coloring validity, linkage row structure, and the
/// radius boundary (the single failing-length search, only up to
/// [`VERIFY_RADIUS_CAP`]). Never repeats an open-ended search. Negative
/// search outcomes (`found: false`, `max_m: 0`) carry no witness and are
/// accepted on shape alone.
///
/// `Ok(false)` means the certificate is well-formed but wrong; schema
/// violations are errors.
pub fn verify_certificate(cert: &Certificate) -> Result<bool, CertError> {
    if cert.schema != SCHEMA {
        return Err(CertError::Schema(cert.schema.clone()));
    }
    let Some(eq) = parse_equation(cert)? else {
        return Ok(false);
    };
    let payload = &cert.payload;
    match cert.kind {
        CertKind::Regularity => {
            let claim = field(payload, "regular")?
                .as_bool()
                .ok_or_else(|| malformed("`regular` must be a boolean"))?;
            if claim {
                let subset: Vec<usize> = string_list(payload, "witness_subset")?
                    .iter()
                    .map(|s| parse_num::<usize>(s, "witness index"))
                    .collect::<Result<_, _>>()?;
                if subset.is_empty()
                    || subset.iter().any(|&i| i < 1 || i > eq.arity())
                    || subset.windows(2).any(|w| w[0] >= w[1])
                {
                    return Ok(false);
                }
                let sum: BigInt = subset.iter().map(|&i| eq.coeffs()[i - 1].clone()).sum();
                Ok(sum.is_zero())
            } else {
                Ok(!rado_regular(&eq))
            }
        }
        CertKind::Ratios => {
            let claimed = parse_rationals(payload, "ratios")?;
            Ok(claimed == forbidden_ratios(&eq))
        }
        CertKind::Linkage => {
            let m: usize = num_field(payload, "max_m")?;
            if m == 0 {
                return Ok(true);
            }
            let first_row = parse_rationals(payload, "first_row")?;
            if first_row.len() != m {
                return Ok(false);
            }
            let Ok(mat) = build_matrix(&eq, &first_row) else {
                return Ok(false);
            };
            let indices: Vec<usize> = string_list(payload, "ratio_indices")?
                .iter()
                .map(|s| parse_num::<usize>(s, "ratio index"))
                .collect::<Result<_, _>>()?;
            let expected: Vec<usize> = mat.first_row().iter().map(|e| e.ratio_index).collect();
            if indices != expected {
                return Ok(false);
            }
            let base: BigInt = num_field(payload, "integrality_base")?;
            Ok(base == mat.integrality_base())
        }
        CertKind::Radius => {
            let r: u32 = num_field(payload, "r")?;
            let ineqs = parse_rows(payload, "ineqs")?;
            let Some(witness) = parse_coloring(field(payload, "witness")?)? else {
                return Ok(false);
            };
            if witness.r() != r {
                return Ok(false);
            }
            if witness.n() > 0 && !verify_coloring(&eq, &witness, &ineqs).is_valid() {
                return Ok(false);
            }
            match str_field(payload, "outcome")? {
                "radius" => {
                    let radius: usize = num_field(payload, "radius")?;
                    if witness.n() + 1 != radius {
                        return Ok(false);
                    }
                    if radius <= VERIFY_RADIUS_CAP {
                        Ok(search_coloring(&eq, r, radius, &ineqs).is_none())
                    } else {
                        Ok(true)
                    }
                }
                "unknown" => {
                    let cap: usize = num_field(payload, "cap")?;
                    Ok(witness.n() == cap)
                }
                other => Err(malformed(format!("unknown outcome `{other}`"))),
            }
        }
        CertKind::Coloring => {
            let found = field(payload, "found")?
                .as_bool()
                .ok_or_else(|| malformed("`found` must be a boolean"))?;
            if !found {
                return Ok(true);
            }
            let r: u32 = num_field(payload, "r")?;
            let n: usize = num_field(payload, "n")?;
            let ineqs = parse_rows(payload, "ineqs")?;
            let Some(witness) = parse_coloring(field(payload, "witness")?)? else {
                return Ok(false);
            };
            if witness.r() != r || witness.n() != n {
                return Ok(false);
            }
            Ok(verify_coloring(&eq, &witness, &ineqs).is_valid())
        }
        CertKind::Solution => {
            let found = field(payload, "found")?
                .as_bool()
                .ok_or_else(|| malformed("`found` must be a boolean"))?;
            if !found {
                return Ok(true);
            }
            let values = parse_bigints(payload, "tuple")?;
            let Ok(tuple) = SolutionTuple::new(values.clone()) else {
                return Ok(false);
            };
            if check_solution(&eq, &tuple) != Ok(true) {
                return Ok(false);
            }
            let ineqs = parse_rows(payload, "ineqs")?;
            for row in &ineqs {
                if row.len() != eq.arity() {
                    return Ok(false);
                }
                let dot: BigInt = row.iter().zip(tuple.values()).map(|(a, x)| a * x).sum();
                if dot.is_zero() {
                    return Ok(false);
                }
            }
            let Some(col) = parse_coloring(field(payload, "coloring")?)? else {
                return Ok(false);
            };
            let claimed: u32 = num_field(payload, "color")?;
            Ok(monochromatic_color(&col, &values) == Some(claimed))
        }
        CertKind::Walk => {
            let first_row = parse_rationals(payload, "first_row")?;
            let Ok(mat) = build_matrix(&eq, &first_row) else {
                return Ok(false);
            };
            let x: BigInt = num_field(payload, "x")?;
            let base = mat.integrality_base();
            if x <= BigInt::zero() || !(&x % &base).is_zero() {
                return Ok(false);
            }
            let pair = parse_bigints(payload, "pair")?;
            let position: Vec<usize> = string_list(payload, "position")?
                .iter()
                .map(|s| parse_num::<usize>(s, "position"))
                .collect::<Result<_, _>>()?;
            if pair.len() != 2 || position.len() != 2 {
                return Ok(false);
            }
            let Some(entry) = mat.entry(position[0], position[1]) else {
                return Ok(false);
            };
            let ratio = Rational::from_str(str_field(payload, "ratio")?)
                .map_err(|_| malformed("bad ratio"))?;
            let index: usize = num_field(payload, "ratio_index")?;
            if entry.ratio != ratio || entry.ratio_index != index {
                return Ok(false);
            }
            // v / u must equal the linking ratio.
            if Rational::new(pair[1].clone(), pair[0].clone()) != ratio {
                return Ok(false);
            }
            let claimed = parse_bigints(payload, "solution")?;
            let Ok(expected) = forbidden_ratio_solution(&eq, index, &pair[0]) else {
                return Ok(false);
            };
            if expected.values() != claimed.as_slice() {
                return Ok(false);
            }
            let Some(col) = parse_coloring(field(payload, "coloring")?)? else {
                return Ok(false);
            };
            let color: u32 = num_field(payload, "color")?;
            if monochromatic_color(&col, &pair) != Some(color) {
                return Ok(false);
            }
            Ok(monochromatic_color(&col, &claimed) == Some(color))
        }
    }
}
