//! JSON, CSV and text renderings of certificates, constants and sweep
//! reports. Rationals are always emitted as `"p/q"` strings.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::bounds::{BoundConstants, CoeffFloor};
use crate::cones::NefConeDescription;
use crate::lattice::{DivisorClass, ValidationReport};
use crate::model_file;
use crate::rational::{Pretty, Rational};
use crate::rr::BoundForm;
use crate::verify::{Branch, Certificate, ProofCase, Slack, VerificationReport};

pub fn q(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn class_json(d: &DivisorClass) -> Value {
    json!([q(&d.coords[0]), q(&d.coords[1])])
}

fn slack_json(s: &Slack) -> Value {
    json!({
        "label": s.label,
        "value": q(&s.value),
        "required": s.sign.symbol(),
        "holds": s.holds(),
    })
}

fn branch_json(b: &Branch) -> Value {
    json!({
        "label": b.label.to_string(),
        "defining": slack_json(&b.defining),
        "conclusion": slack_json(&b.conclusion),
    })
}

pub fn form_json(f: &BoundForm) -> Value {
    json!({
        "alpha": q(&f.alpha),
        "beta": q(&f.beta),
        "h0_min": q(&f.h0_min),
        "h0_max": f.h0_max.as_ref().map(q),
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    json!({
        "class": class_json(&c.class),
        "position": c.position.to_string(),
        "proof_case": c.proof_case.to_string(),
        "hypothesis_slacks": c.hypothesis_slacks.iter().map(slack_json).collect::<Vec<_>>(),
        "dichotomy_branch": c.branch.as_ref().map(branch_json),
        "l_value": q(&c.l_value),
        "bound_form": c.bound_form.as_ref().map(form_json),
        "c_x": q(&c.c_x),
        "entailed": c.entailed,
    })
}

pub fn constants_json(k: &BoundConstants) -> Value {
    let floor = match &k.coeff_floor {
        CoeffFloor::Uniform(c) => json!({ "c": q(c) }),
        CoeffFloor::Fibred { a2_min, a1_per_a2 } => {
            json!({ "a2_min": q(a2_min), "a1_per_a2": q(a1_per_a2) })
        }
    };
    json!({
        "b_x": q(&k.b_x),
        "coeff_floor": floor,
        "slope_bound": q(&k.slope_bound),
        "area_bound": q(&k.area_bound),
        "m_x": q(&k.m_x),
        "case_values": k.case_values.iter().map(q).collect::<Vec<_>>(),
        "c_x": q(&k.c_x),
        "floored": k.floored,
    })
}

pub fn nef_cone_json(n: &NefConeDescription) -> Value {
    let ineq: Vec<Value> = n
        .inequalities
        .iter()
        .map(|h| json!({ "on_a1": q(&h.on_a1), "on_a2": q(&h.on_a2), "text": h.to_string() }))
        .collect();
    json!({ "kind": n.kind.to_string(), "inequalities": ineq })
}

pub fn validation_json(r: &ValidationReport) -> Value {
    json!({
        "valid": r.is_valid(),
        "checks": r.checks,
    })
}

/// The sweep report. `wall_time_ms` is the only field that varies between
/// identical runs.
pub fn report_json(r: &VerificationReport) -> Value {
    let counts: Map<String, Value> = r
        .counts
        .iter()
        .map(|(case, n)| (case.to_string(), json!(n)))
        .collect();
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            let mut c = certificate_json(&v.certificate);
            c["failed"] = json!(v.failed);
            c
        })
        .collect();
    let mut constants = constants_json(&r.constants);
    constants["c_x_used"] = q(&r.c_x_used);
    json!({
        "model": model_file::to_value(&r.model),
        "box": r.box_radius,
        "constants": constants,
        "counts": counts,
        "violations": violations,
        "min_slope_slack": r.min_slope_slack.as_ref().map(q),
        "attained_extremes": r.attained_extremes.iter().map(class_json).collect::<Vec<_>>(),
        "passed": r.passed(),
        "wall_time_ms": r.wall_time.as_millis() as u64,
    })
}

pub fn report_csv(r: &VerificationReport) -> String {
    let mut out = String::from("proof_case,count\n");
    for case in ProofCase::ALL {
        let _ = writeln!(out, "{case},{}", r.count(case));
    }
    let _ = writeln!(out, "violations,{}", r.violations.len());
    out
}

pub fn constants_text(k: &BoundConstants) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "b(X)   = {}", Pretty(&k.b_x));
    match &k.coeff_floor {
        CoeffFloor::Uniform(c) => {
            let _ = writeln!(out, "c      = {}", Pretty(c));
        }
        CoeffFloor::Fibred { a2_min, a1_per_a2 } => {
            let _ = writeln!(
                out,
                "floors: a2 >= {}, a1 >= {} * a2",
                Pretty(a2_min),
                Pretty(a1_per_a2)
            );
        }
    }
    let _ = writeln!(out, "slope  = {}", Pretty(&k.slope_bound));
    let _ = writeln!(out, "area   = {}", Pretty(&k.area_bound));
    let _ = writeln!(out, "m(X)   = {}", Pretty(&k.m_x));
    let names = ["q", "(m^2 - m + 2q)/2", "(m + 2q)/2", "(2q + m + b)/2"];
    for (name, v) in names.iter().zip(&k.case_values) {
        let _ = writeln!(out, "  case {name:<18} {}", Pretty(v));
    }
    let floored = if k.floored { " (floored at 1)" } else { "" };
    let _ = writeln!(out, "c_X    = {}{floored}", Pretty(&k.c_x));
    out
}

pub fn certificate_text(c: &Certificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "class      {}", c.class);
    let _ = writeln!(out, "position   {}", c.position);
    let _ = writeln!(out, "case       {}", c.proof_case);
    let _ = writeln!(out, "l_D        {}", Pretty(&c.l_value));
    for s in &c.hypothesis_slacks {
        let _ = writeln!(out, "  {s}");
    }
    if let Some(b) = &c.branch {
        let _ = writeln!(out, "branch     {}", b.label);
        let _ = writeln!(out, "  {}", b.defining);
        let _ = writeln!(out, "  {}", b.conclusion);
    }
    if let Some(f) = &c.bound_form {
        let _ = writeln!(out, "bound      {f}");
    }
    let _ = writeln!(out, "c_X        {}", Pretty(&c.c_x));
    let _ = writeln!(out, "entailed   {}", c.entailed);
    out
}

pub fn report_text(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "model      {}", r.model.kind);
    let _ = writeln!(out, "box        [-{0}, {0}]^2", r.box_radius);
    let _ = writeln!(out, "c_X        {}", Pretty(&r.c_x_used));
    let _ = writeln!(out, "m(X)       {}", Pretty(&r.constants.m_x));
    for case in ProofCase::ALL {
        let _ = writeln!(out, "  {:<18} {}", case.to_string(), r.count(case));
    }
    if let Some(m) = &r.min_slope_slack {
        let _ = writeln!(out, "min m(X) - l_D  {}", Pretty(m));
    }
    for d in &r.attained_extremes {
        let _ = writeln!(out, "  attained at {d}");
    }
    let _ = writeln!(out, "violations {}", r.violations.len());
    for v in r.violations.iter().take(20) {
        let _ = writeln!(
            out,
            "  {} [{}]: {}",
            v.certificate.class,
            v.certificate.proof_case,
            v.failed.join("; ")
        );
    }
    if r.violations.len() > 20 {
        let _ = writeln!(out, "  ... {} more", r.violations.len() - 20);
    }
    let _ = writeln!(out, "time       {} ms", r.wall_time.as_millis());
    out
}
