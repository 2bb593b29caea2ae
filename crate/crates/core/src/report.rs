//! JSON emission for verification outcomes and Jacobian audits.
//!
//! All documents carry `"schema": "rees-report/1"`. Keys serialize in
//! sorted order, so identical inputs produce identical bytes except for
//! the `wall_time_ms` field, which reflects real elapsed time;
//! `strip_wall_time` zeroes it for golden-file comparison.

use crate::curve::CurveParams;
use crate::order::OrderSpec;
use crate::ring::QPoly;
use crate::smooth::JacobianReport;
use crate::verify::{CertificateSummary, TheoremOutcome};
use serde_json::{json, Value};

pub const SCHEMA: &str = "rees-report/1";

pub fn params_json(p: &CurveParams) -> Value {
    json!({
        "m0": p.m0,
        "d": p.d,
        "a": p.a,
        "b": p.b,
        "m": p.m,
    })
}

fn certificate_json(c: &CertificateSummary) -> Value {
    json!({
        "basis": c.basis,
        "left": c.left,
        "right": c.right,
        "lcm": c.lcm,
        "skipped_coprime": c.skipped_coprime,
        "remainder_is_zero": c.remainder_is_zero,
        "steps": c.steps,
    })
}

/// One verification outcome as a JSON document.
pub fn verification_json(o: &TheoremOutcome) -> Value {
    let ideal_equality = match &o.ideal_equality {
        Some(eq) => json!({ "forward": eq.forward, "backward": eq.backward }),
        None => Value::Null,
    };
    json!({
        "schema": SCHEMA,
        "kind": "verification",
        "target": o.target.id(),
        "params": params_json(&o.params),
        "pass": o.pass,
        "certificates": o.certificates.iter().map(certificate_json).collect::<Vec<_>>(),
        "ideal_equality": ideal_equality,
        "lm_set_diff": o.lm_set_diff,
        "term_diffs": o.term_diffs,
        "notes": o.notes,
        "wall_time_ms": o.wall_time_ms as u64,
    })
}

/// A Jacobian audit as a JSON document.
pub fn jacobian_json(r: &JacobianReport) -> Value {
    json!({
        "schema": SCHEMA,
        "kind": "jacobian",
        "b": r.b,
        "params": params_json(&r.params),
        "theta": r.theta,
        "columns": r.columns,
        "nonzero_columns": r.nonzero_columns,
        "rank": r.rank,
        "printed_set_rank": r.printed_set_rank,
        "codim": r.codim,
        "verdict": r.verdict.as_str(),
        "seeds": r.seeds,
        "evaluation_points": r.evaluation_points,
        "residue_matrix": r.residue_matrix,
        "wall_time_ms": r.wall_time_ms as u64,
    })
}

/// Parameter echo (used by the `params` subcommand): derived exponents
/// plus the binomial generating set of the curve ideal, in order.
pub fn curve_json(p: &CurveParams, generators: &[QPoly], order: &OrderSpec) -> Value {
    let texts: Vec<String> = generators
        .iter()
        .map(|g| crate::order::canonical_text(g, order))
        .collect();
    json!({
        "schema": SCHEMA,
        "kind": "params",
        "params": params_json(p),
        "binomial_generators": texts,
        "order": order.to_json(),
    })
}

/// Canonical text form: pretty-printed with sorted keys and a trailing
/// newline, the exact byte format written to golden files.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON serialization cannot fail");
    s.push('\n');
    s
}

/// Recursively zeroes every `wall_time_ms` field (the only field that
/// varies between identical runs) for byte-level comparisons.
pub fn strip_wall_time(v: &mut Value) {
    match v {
        Value::Object(map) => {
            if let Some(t) = map.get_mut("wall_time_ms") {
                *t = json!(0);
            }
            for (_, child) in map.iter_mut() {
                strip_wall_time(child);
            }
        }
        Value::Array(items) => {
            for item in items {
                strip_wall_time(item);
            }
        }
        _ => {}
    }
}
