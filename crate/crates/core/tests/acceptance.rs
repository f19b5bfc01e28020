//! One test per acceptance criterion. Each prints a single PASS/FAIL line;
//! run with `--nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use num_traits::Zero;
use picard2::bounds::{self, CoeffFloor};
use picard2::cones::{self, ConePosition};
use picard2::rational::{frac, int};
use picard2::rr;
use picard2::verify::{labels, ProofCase, Verifier};
use picard2::{fuzz, DivisorClass, ModelKind, Rational, Surface};

use common::oracle::oracle_certify;
use common::{box_classes, model_a, model_b};

fn report(n: u32, name: &str, ok: bool, detail: String) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!("criterion {n} [{verdict}] {name}: {detail}");
    assert!(ok, "criterion {n} failed: {detail}");
}

fn within(t: Duration, limit: Duration) -> bool {
    t < limit
}

#[test]
fn criterion_1_constants_model_a() {
    let start = Instant::now();
    let k = bounds::c_of_x(&model_a());
    let t = start.elapsed();
    let want_cases = [int(0), int(28), int(4), frac(9, 2)];
    let ok = k.coeff_floor == CoeffFloor::Uniform(frac(1, 6))
        && k.m_x == int(8)
        && k.b_x == int(1)
        && k.c_x == int(28)
        && k.case_values == want_cases
        && within(t, Duration::from_secs(1));
    report(
        1,
        "Model A constants",
        ok,
        format!(
            "c={} m={} b={} c_X={} cases=[{}] in {t:?}",
            match &k.coeff_floor {
                CoeffFloor::Uniform(c) => c.to_string(),
                other => format!("{other:?}"),
            },
            k.m_x,
            k.b_x,
            k.c_x,
            k.case_values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    );
}

#[test]
fn criterion_2_constants_model_b() {
    let start = Instant::now();
    let k = bounds::c_of_x(&model_b());
    let t = start.elapsed();
    let ok = k.m_x == frac(1, 192)
        && k.b_x == int(2)
        && k.c_x == frac(769, 384)
        && within(t, Duration::from_secs(1));
    report(
        2,
        "Model B constants",
        ok,
        format!("m={} b={} c_X={} in {t:?}", k.m_x, k.b_x, k.c_x),
    );
}

#[test]
fn criterion_3_exhaustive_verification() {
    let a = model_a();
    let b = model_b();
    let ra = Verifier::new(&a).verify_box(50, None);
    let rb = Verifier::new(&b).verify_box(100, None);
    let limit = Duration::from_secs(60);
    let ok =
        ra.passed() && rb.passed() && within(ra.wall_time, limit) && within(rb.wall_time, limit);
    let big = ra.count(ProofCase::BigClass) + rb.count(ProofCase::BigClass);
    report(
        3,
        "zero violations, A box 50 and B box 100",
        ok,
        format!(
            "violations A={} B={}, BigClass certified={big}, time A={:?} B={:?}",
            ra.violations.len(),
            rb.violations.len(),
            ra.wall_time,
            rb.wall_time
        ),
    );
}

#[test]
fn criterion_4_sharpness_witness() {
    let b = model_b();
    let v = Verifier::new(&b);
    let witness = DivisorClass::from_ints(2, 1);
    let cert = v.certify(&witness).unwrap();
    let slack = cert.slack(labels::SLOPE).map(|s| s.value.clone());
    let r = v.verify_box(100, None);
    let ok = cert.proof_case == ProofCase::BigClass
        && slack.as_ref().is_some_and(Zero::is_zero)
        && r.min_slope_slack.as_ref().is_some_and(Zero::is_zero)
        && r.attained_extremes == vec![witness];
    report(
        4,
        "slope slack attains 0 at 2F + C on Model B",
        ok,
        format!(
            "slack={}, zero-slack classes in box 100: {:?}",
            slack.map(|s| s.to_string()).unwrap_or_default(),
            r.attained_extremes
                .iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
        ),
    );
}

#[test]
fn criterion_5_serre_symmetry() {
    let surfaces = fuzz::random_surfaces(5, 100);
    let mut rng = fuzz::rng(55);
    let mut checked = 0;
    let mut bad = Vec::new();
    for s in &surfaces {
        for _ in 0..100 {
            let d = fuzz::random_class(&mut rng, 30, 12);
            let dual = &s.canonical - &d;
            if rr::euler_char(s, &d) != rr::euler_char(s, &dual) {
                bad.push(d);
            }
            checked += 1;
        }
    }
    report(
        5,
        "chi(d) = chi(K - d)",
        bad.is_empty() && checked == 10_000,
        format!(
            "{checked} classes on {} models, {} mismatches",
            surfaces.len(),
            bad.len()
        ),
    );
}

#[test]
fn criterion_6_nef_duality() {
    let mut checked = 0u64;
    let mut bad = Vec::new();
    for s in [model_a(), model_b()] {
        let desc = cones::nef_cone(&s);
        for d in box_classes(100) {
            let direct = s.pair(&d, &s.gen1) >= int(0) && s.pair(&d, &s.gen2) >= int(0);
            let (a1, a2) = s.generator_coords(&d);
            if desc.contains(&a1, &a2) != direct || cones::is_nef(&s, &d) != direct {
                bad.push(d);
            }
            checked += 1;
        }
    }
    report(
        6,
        "nef cone description matches d.C_i >= 0",
        bad.is_empty(),
        format!("{checked} classes, {} mismatches", bad.len()),
    );
}

/// Numerical curve hypotheses: nef interior classes (with `d.F >= 1` on
/// fibred models) and ray classes within the negativity bound.
fn is_candidate(s: &Surface, d: &DivisorClass, b: &Rational) -> bool {
    match cones::position(s, d) {
        ConePosition::Interior => {
            let floor = match s.kind {
                ModelKind::KodairaOne => int(1),
                ModelKind::TwoNegative => int(0),
            };
            s.pair(d, &s.gen1) >= floor && s.pair(d, &s.gen2) >= int(0)
        }
        ConePosition::Ray1 | ConePosition::Ray2 => s.self_int(d) >= -b.clone(),
        _ => false,
    }
}

#[test]
fn criterion_7_cone_structure() {
    let surfaces = fuzz::random_surfaces(7, 100);
    let mut candidates = 0u64;
    let mut bad = Vec::new();
    let mut non_candidate_interior = 0u64;
    for s in &surfaces {
        let b = bounds::b_of_x(s);
        for d in box_classes(25) {
            let pos = cones::position(s, &d);
            if !pos.in_cone() {
                continue;
            }
            let d2 = s.self_int(&d);
            if !is_candidate(s, &d, &b) {
                if pos == ConePosition::Interior && d2 <= int(0) {
                    non_candidate_interior += 1;
                }
                continue;
            }
            candidates += 1;
            let ray_ok = d2 > int(0) || pos.on_ray();
            let interior_ok = pos != ConePosition::Interior || d2 > int(0);
            let iso_ok = s.kind != ModelKind::TwoNegative || !d2.is_zero();
            if !(ray_ok && interior_ok && iso_ok) {
                bad.push((s.kind, d));
            }
        }
    }
    report(
        7,
        "d^2 <= 0 only on rays, interior has d^2 > 0 (curve candidates)",
        bad.is_empty(),
        format!(
            "{candidates} candidate classes on {} models, {} failures; {non_candidate_interior} non-candidate interior classes with d^2 <= 0 excluded",
            surfaces.len(),
            bad.len()
        ),
    );
}

#[test]
fn criterion_8_oracle_equivalence() {
    let mut surfaces = vec![model_a(), model_b()];
    surfaces.extend(fuzz::random_surfaces(8, 100));
    let mut checked = 0u64;
    let mut first_bad = None;
    let mut mismatches = 0u64;
    for s in &surfaces {
        let v = Verifier::new(s);
        for d in box_classes(25) {
            let ours = v.certify(&d).unwrap();
            let theirs = oracle_certify(s.model(), &d, None).unwrap();
            if ours != theirs {
                mismatches += 1;
                first_bad.get_or_insert((s.model().clone(), d));
            }
            checked += 1;
        }
    }
    report(
        8,
        "certify equals oracle_certify",
        mismatches == 0,
        format!(
            "{checked} certificates on {} models, {mismatches} mismatches{}",
            surfaces.len(),
            first_bad
                .map(|(_, d)| format!(", first at {d}"))
                .unwrap_or_default()
        ),
    );
}

#[test]
fn criterion_9_bound_form_soundness() {
    let start = Instant::now();
    let mut triples = 0u64;
    let mut bad = Vec::new();
    for s in [model_a(), model_b()] {
        let pg = s.pg;
        for d in box_classes(10) {
            if !cones::position(&s, &d).in_cone() {
                continue;
            }
            let form = rr::h1_bound_form(&s, &d).unwrap();
            let chi = rr::euler_char(&s, &d);
            for h0 in 0..=50i64 {
                let h0r = int(h0);
                if !form.covers(&h0r) {
                    continue;
                }
                for h2 in 0..=pg.min(50) {
                    // h1 = h0 + h2 - chi
                    let h1 = &h0r + int(h2) - &chi;
                    if !h1.is_integer() || h1 < int(0) || h1 > int(50) {
                        continue;
                    }
                    triples += 1;
                    if !form.admits(&h0r, &h1) {
                        bad.push((d.clone(), h0, h1, h2));
                    }
                }
            }
        }
    }
    let t = start.elapsed();
    report(
        9,
        "h1 <= alpha h0 + beta on all admissible (h0, h1, h2) <= 50",
        bad.is_empty() && within(t, Duration::from_secs(120)),
        format!("{triples} triples, {} violations, {t:?}", bad.len()),
    );
}
