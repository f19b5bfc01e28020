use picard2_web::{analyze_json, bounds_json, certify_json, reference_model_json, MAX_RADIUS};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn bounds_of_reference_models() {
    let a = reference_model_json("a").unwrap();
    let v = parse(bounds_json(&a).unwrap());
    assert_eq!(v["c_x"], "28");
    assert_eq!(v["coeff_floor"]["c"], "1/6");

    let b = reference_model_json("B").unwrap();
    let v = parse(bounds_json(&b).unwrap());
    assert_eq!(v["m_x"], "1/192");
    assert_eq!(v["decimal"]["c_x"], "2.00260");
    assert!(v["text"].as_str().unwrap().contains("c_X    = 769/384"));
}

#[test]
fn analyze_reports_every_class_once() {
    let b = reference_model_json("b").unwrap();
    let v = parse(analyze_json(&b, 6).unwrap());
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 13 * 13 - 1);
    let total: u64 = v["counts"]
        .as_object()
        .unwrap()
        .values()
        .map(|n| n.as_u64().unwrap())
        .sum();
    assert_eq!(total, points.len() as u64);
    assert_eq!(v["violations"], 0);
    assert_eq!(v["mori_rays"], serde_json::json!([["1", "0"], ["0", "1"]]));
    // nef rays of Model B: F itself and 2F + C
    assert_eq!(v["nef_rays"], serde_json::json!([["1", "0"], ["2", "1"]]));
}

#[test]
fn analyze_clamps_radius() {
    let a = reference_model_json("a").unwrap();
    let v = parse(analyze_json(&a, 10_000).unwrap());
    assert_eq!(v["radius"], MAX_RADIUS);
}

#[test]
fn certify_witness_and_errors() {
    let b = reference_model_json("b").unwrap();
    let v = parse(certify_json(&b, "2", "1").unwrap());
    assert_eq!(v["proof_case"], "BigClass");
    assert_eq!(v["l_value"], "1/192");
    assert_eq!(v["d2"], "2");
    assert_eq!(v["nef"], true);

    assert!(certify_json(&b, "0", "0").is_err());
    assert!(certify_json(&b, "1/0", "1").is_err());
    assert!(certify_json("{}", "1", "1").is_err());
    assert!(reference_model_json("k3").is_err());
}

#[test]
fn certify_accepts_rational_classes() {
    let a = reference_model_json("a").unwrap();
    let v = parse(certify_json(&a, "1/2", "1/2").unwrap());
    assert_eq!(v["position"], "Interior");
    assert_eq!(v["d2"], "1/2");
}
