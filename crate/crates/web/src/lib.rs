//! Browser bindings for the `www/` demo.
//!
//! The exported functions take a model file as JSON text and return JSON
//! text. The `*_json` functions are the plain Rust versions, used by the
//! wasm wrappers and the native tests.

use num_traits::Signed;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use picard2::cones;
use picard2::model_file;
use picard2::rational::{self, Rational};
use picard2::report;
use picard2::verify::{ProofCase, Verifier};
use picard2::{DivisorClass, Surface, SurfaceModel};

/// Largest box radius the demo will sweep.
pub const MAX_RADIUS: u32 = 40;

fn surface(model_json: &str) -> Result<Surface, String> {
    let m = model_file::parse_model(model_json).map_err(|e| e.to_string())?;
    Surface::new(m).map_err(|e| e.to_string())
}

pub fn reference_model_json(name: &str) -> Result<String, String> {
    match name {
        "a" | "A" => Ok(model_file::to_json(&SurfaceModel::reference_a())),
        "b" | "B" => Ok(model_file::to_json(&SurfaceModel::reference_b())),
        other => Err(format!("unknown reference model `{other}`")),
    }
}

/// Nef boundary ray orthogonal to `g`, oriented to meet `other` non-negatively.
fn nef_ray(s: &Surface, g: &DivisorClass, other: &DivisorClass) -> DivisorClass {
    let gram = &s.form.gram;
    let w0 = &gram[0][0] * &g.coords[0] + &gram[0][1] * &g.coords[1];
    let w1 = &gram[1][0] * &g.coords[0] + &gram[1][1] * &g.coords[1];
    let v = DivisorClass::new(-w1, w0);
    if s.pair(&v, other).is_negative() {
        -&v
    } else {
        v
    }
}

/// Constants, cone rays and one entry per nonzero integral class in
/// `[-n, n]^2` with its proof case and verdict.
pub fn analyze_json(model_json: &str, n: u32) -> Result<String, String> {
    let s = surface(model_json)?;
    let n = n.clamp(1, MAX_RADIUS) as i64;
    let v = Verifier::new(&s);
    let mut points = Vec::new();
    let mut counts = std::collections::BTreeMap::new();
    let mut violations = 0u64;
    for x in -n..=n {
        for y in -n..=n {
            let d = DivisorClass::from_ints(x, y);
            if d.is_zero() {
                continue;
            }
            let c = v.certify(&d).map_err(|e| e.to_string())?;
            *counts.entry(c.proof_case.to_string()).or_insert(0u64) += 1;
            let bad = c.is_violation();
            violations += bad as u64;
            points.push(json!([x, y, c.proof_case.to_string(), bad]));
        }
    }
    for case in ProofCase::ALL {
        counts.entry(case.to_string()).or_insert(0);
    }
    let out = json!({
        "radius": n,
        "kind": s.kind.to_string(),
        "constants": report::constants_json(v.constants()),
        "mori_rays": [report::class_json(&s.gen1), report::class_json(&s.gen2)],
        "nef_rays": [
            report::class_json(&nef_ray(&s, &s.gen1, &s.gen2)),
            report::class_json(&nef_ray(&s, &s.gen2, &s.gen1)),
        ],
        "nef_cone": report::nef_cone_json(&cones::nef_cone(&s)),
        "counts": counts,
        "violations": violations,
        "points": points,
    });
    Ok(out.to_string())
}

/// Certificate for the class `(x, y)`; coordinates are integers or `p/q`.
pub fn certify_json(model_json: &str, x: &str, y: &str) -> Result<String, String> {
    let s = surface(model_json)?;
    let parse = |t: &str| rational::parse(t).map_err(|e| e.to_string());
    let d = DivisorClass::new(parse(x)?, parse(y)?);
    let c = Verifier::new(&s).certify(&d).map_err(|e| e.to_string())?;
    let mut out = report::certificate_json(&c);
    out["d2"] = report::q(&s.self_int(&d));
    out["k_dot_d"] = report::q(&s.pair(&s.canonical, &d));
    out["euler_char"] = report::q(&picard2::rr::euler_char(&s, &d));
    out["nef"] = Value::Bool(cones::is_nef(&s, &d));
    out["text"] = Value::String(report::certificate_text(&c));
    Ok(out.to_string())
}

/// Bound constants, with the headline values also as 6-digit decimals.
pub fn bounds_json(model_json: &str) -> Result<String, String> {
    let s = surface(model_json)?;
    let k = picard2::bounds::c_of_x(&s);
    let approx = |r: &Rational| rational::approx(r, 6);
    let mut out = report::constants_json(&k);
    out["text"] = Value::String(report::constants_text(&k));
    out["decimal"] = json!({
        "m_x": approx(&k.m_x),
        "c_x": approx(&k.c_x),
        "b_x": approx(&k.b_x),
    });
    Ok(out.to_string())
}

#[wasm_bindgen]
pub fn reference_model(name: &str) -> Result<String, JsError> {
    reference_model_json(name).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(model_json: &str, n: u32) -> Result<String, JsError> {
    analyze_json(model_json, n).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn certify(model_json: &str, x: &str, y: &str) -> Result<String, JsError> {
    certify_json(model_json, x, y).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn bounds(model_json: &str) -> Result<String, JsError> {
    bounds_json(model_json).map_err(|e| JsError::new(&e))
}
