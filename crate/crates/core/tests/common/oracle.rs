//! Straight-line re-derivation of certificates from the raw model fields.
//!
//! Shares nothing with the library beyond the rational type and the
//! certificate record it fills in. Labels are spelled out literally so a
//! renamed label in the library shows up as a mismatch.

use num_traits::{Signed, Zero};
use picard2::cones::ConePosition;
use picard2::rr::BoundForm;
use picard2::verify::{Branch, BranchLabel, Certificate, ProofCase, Sign, Slack};
use picard2::{DivisorClass, ModelKind, Rational, SurfaceModel};

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn dot(m: &SurfaceModel, u: &[Rational; 2], v: &[Rational; 2]) -> Rational {
    let g = &m.form.gram;
    &u[0] * &g[0][0] * &v[0]
        + &u[0] * &g[0][1] * &v[1]
        + &u[1] * &g[1][0] * &v[0]
        + &u[1] * &g[1][1] * &v[1]
}

fn bigger(a: Rational, b: Rational) -> Rational {
    if a > b {
        a
    } else {
        b
    }
}

fn smaller(a: Rational, b: Rational) -> Rational {
    if a < b {
        a
    } else {
        b
    }
}

fn slack(label: &'static str, value: Rational, sign: Sign) -> Slack {
    Slack { label, value, sign }
}

fn ok(s: &Slack) -> bool {
    match s.sign {
        Sign::Positive => s.value > r(0),
        Sign::NonNegative => s.value >= r(0),
        Sign::Negative => s.value < r(0),
        Sign::NonPositive => s.value <= r(0),
    }
}

/// Constants `(b, m(X), c_X, area)` plus the floor data, recomputed.
pub struct OracleConstants {
    pub b: Rational,
    pub m_x: Rational,
    pub c_x: Rational,
    pub area: Rational,
    pub floor_c: Option<Rational>,
    pub floor_fibre: Option<(Rational, Rational)>,
    pub k_coords: (Rational, Rational),
}

pub fn constants(m: &SurfaceModel) -> OracleConstants {
    let g1 = &m.gen1.coords;
    let g2 = &m.gen2.coords;
    let c11 = dot(m, g1, g1);
    let c22 = dot(m, g2, g2);
    let c12 = dot(m, g1, g2);
    let det = &g1[0] * &g2[1] - &g1[1] * &g2[0];
    let kx = &m.canonical.coords;
    let ka = (&kx[0] * &g2[1] - &kx[1] * &g2[0]) / &det;
    let kb = (&g1[0] * &kx[1] - &g1[1] * &kx[0]) / &det;
    let two = r(2);

    let (b, m_x, area, floor_c, floor_fibre) = match m.kind {
        ModelKind::KodairaOne => {
            let it = r(m.iitaka_m.unwrap());
            let fc = c12.clone();
            let neg_c2 = -c22.clone();
            let b = neg_c2.clone();
            let slope = &fc * &fc / (&it * &neg_c2);
            let area = &two * &fc * &fc / (&it * &it * &neg_c2);
            let floors = (r(1) / &fc, &neg_c2 / &fc);
            (b, bigger(slope, area.clone()), area, None, Some(floors))
        }
        ModelKind::TwoNegative => {
            let n1 = -c11.clone();
            let n2 = -c22.clone();
            let b = bigger(n1.clone(), n2.clone());
            let inv1 = r(1) / (&c11 + &c12 * &c12 / &n2);
            let inv2 = r(1) / (&c22 + &c12 * &c12 / &n1);
            let c = smaller(
                smaller(inv1.clone(), &n2 / &c12 * &inv1),
                smaller(inv2.clone(), &n1 / &c12 * &inv2),
            );
            let slope = bigger(&ka / &c, &kb / &c);
            let area = bigger(
                &two * &ka * &ka * &c12 * &c12 / &n2,
                &two * &kb * &kb * &c12 * &c12 / &n1,
            );
            (b, bigger(slope, area.clone()), area, Some(c), None)
        }
    };
    let q = r(m.q);
    let cases = [
        q.clone(),
        (&m_x * &m_x - &m_x + &two * &q) / &two,
        (&m_x + &two * &q) / &two,
        (&two * &q + &m_x + &b) / &two,
    ];
    let mut c_x = r(1);
    for v in cases {
        c_x = bigger(c_x, v);
    }
    OracleConstants {
        b,
        m_x,
        c_x,
        area,
        floor_c,
        floor_fibre,
        k_coords: (ka, kb),
    }
}

fn oracle_entails(f: &BoundForm, c: &Rational) -> bool {
    let lo = f.h0_min.ceil();
    let alpha_int = f.alpha.is_integer();
    let rhs = |h: &Rational| {
        let v = &f.alpha * h + &f.beta;
        if alpha_int {
            v.floor()
        } else {
            v
        }
    };
    match &f.h0_max {
        None => c >= &f.alpha && c * &lo >= rhs(&lo),
        Some(hi) => {
            let hi = hi.floor();
            if hi < lo {
                return true;
            }
            c * &lo >= rhs(&lo) && c * &hi >= rhs(&hi)
        }
    }
}

pub fn oracle_certify(
    m: &SurfaceModel,
    d: &DivisorClass,
    c_x_override: Option<&Rational>,
) -> Option<Certificate> {
    let x = &d.coords;
    if x[0].is_zero() && x[1].is_zero() {
        return None;
    }
    let k = constants(m);
    let c_x = c_x_override.cloned().unwrap_or(k.c_x.clone());
    let g1 = &m.gen1.coords;
    let g2 = &m.gen2.coords;
    let det = &g1[0] * &g2[1] - &g1[1] * &g2[0];
    let a1 = (&x[0] * &g2[1] - &x[1] * &g2[0]) / &det;
    let a2 = (&g1[0] * &x[1] - &g1[1] * &x[0]) / &det;

    let d2 = dot(m, x, x);
    let kd = dot(m, &m.canonical.coords, x);
    let l = if d2.is_zero() {
        kd.clone()
    } else if d2 > r(1) {
        &kd / &d2
    } else {
        kd.clone()
    };

    let position = if a1.is_negative() || a2.is_negative() {
        ConePosition::Outside
    } else if a2.is_zero() {
        ConePosition::Ray1
    } else if a1.is_zero() {
        ConePosition::Ray2
    } else {
        ConePosition::Interior
    };

    if position == ConePosition::Outside {
        return Some(Certificate {
            class: d.clone(),
            position,
            proof_case: ProofCase::OutsideCone,
            hypothesis_slacks: vec![],
            branch: None,
            l_value: l,
            bound_form: None,
            c_x,
            entailed: false,
        });
    }

    let q = r(m.q);
    let chi_d = r(m.chi) + (&d2 - &kd) / r(2);
    let form = if d2 > r(0) {
        let h0 = bigger(r(1), &chi_d - r(m.pg));
        BoundForm {
            alpha: r(1),
            beta: &q - r(1) + (&kd - &d2) / r(2),
            h0_min: h0,
            h0_max: None,
        }
    } else if d2 == r(0) {
        BoundForm {
            alpha: r(1),
            beta: &q - r(1) + &kd / r(2),
            h0_min: r(1),
            h0_max: None,
        }
    } else {
        BoundForm {
            alpha: r(0),
            beta: &q + (&kd - &d2) / r(2),
            h0_min: r(1),
            h0_max: Some(r(1)),
        }
    };

    let mut hyps = Vec::new();
    let mut branch = None;
    let case;
    if position != ConePosition::Interior {
        if d2 < r(0) {
            let s = slack("D^2 >= -b(X)", &d2 + &k.b, Sign::NonNegative);
            case = if ok(&s) {
                ProofCase::NegativeRay
            } else {
                ProofCase::SkippedHypothesis
            };
            hyps.push(s);
        } else if d2 == r(0) {
            case = ProofCase::ZeroSquare;
        } else {
            hyps.push(slack("ray class D^2 <= 0", -d2.clone(), Sign::NonNegative));
            case = ProofCase::SkippedHypothesis;
        }
    } else {
        let dg1 = dot(m, x, g1);
        let dg2 = dot(m, x, g2);
        let fibred = m.kind == ModelKind::KodairaOne;
        if fibred {
            hyps.push(slack("D.F >= 1", dg1 - r(1), Sign::NonNegative));
            hyps.push(slack("D.C >= 0", dg2, Sign::NonNegative));
        } else {
            hyps.push(slack("D.C1 >= 0", dg1, Sign::NonNegative));
            hyps.push(slack("D.C2 >= 0", dg2, Sign::NonNegative));
        }
        if hyps.iter().all(ok) {
            case = ProofCase::BigClass;
            hyps.push(slack("D^2 > 0", d2.clone(), Sign::Positive));
            if fibred {
                let (a2_min, per) = k.floor_fibre.clone().unwrap();
                hyps.push(slack("a2 >= 1/(F.C)", &a2 - a2_min, Sign::NonNegative));
                hyps.push(slack(
                    "a1 >= a2 (-C^2)/(F.C)",
                    &a1 - per * &a2,
                    Sign::NonNegative,
                ));
            } else {
                let c = k.floor_c.clone().unwrap();
                hyps.push(slack("a1 >= c", &a1 - &c, Sign::NonNegative));
                hyps.push(slack("a2 >= c", &a2 - &c, Sign::NonNegative));
            }
            hyps.push(slack("l_D <= m(X)", &k.m_x - &l, Sign::NonNegative));
            if l > r(1) {
                hyps.push(slack(
                    "D^2 <= m(X) h0_min",
                    &k.m_x * &form.h0_min - &d2,
                    Sign::NonNegative,
                ));
            }
            branch = Some(if fibred {
                let v = r(m.iitaka_m.unwrap()) * &a1 - r(1);
                if v >= r(0) {
                    Branch {
                        label: BranchLabel::NefSide,
                        defining: slack("m a1 - 1 >= 0", v, Sign::NonNegative),
                        conclusion: slack("(D - K).D >= 0", &d2 - &kd, Sign::NonNegative),
                    }
                } else {
                    Branch {
                        label: BranchLabel::SmallArea,
                        defining: slack("m a1 - 1 < 0", v, Sign::Negative),
                        conclusion: slack(
                            "D^2 < 2 m^-2 (F.C)^2 / (-C^2)",
                            &k.area - &d2,
                            Sign::Positive,
                        ),
                    }
                }
            } else {
                let (ka, kb) = &k.k_coords;
                let v = smaller(&a1 - ka, &a2 - kb);
                if v > r(0) {
                    Branch {
                        label: BranchLabel::NefSide,
                        defining: slack("min(a1 - a, a2 - b) > 0", v, Sign::Positive),
                        conclusion: slack("(D - K).D > 0", &d2 - &kd, Sign::Positive),
                    }
                } else {
                    Branch {
                        label: BranchLabel::SmallArea,
                        defining: slack("min(a1 - a, a2 - b) <= 0", v, Sign::NonPositive),
                        conclusion: slack("D^2 <= area bound", &k.area - &d2, Sign::NonNegative),
                    }
                }
            });
        } else {
            case = ProofCase::SkippedHypothesis;
        }
    }

    let entailed = oracle_entails(&form, &c_x);
    Some(Certificate {
        class: d.clone(),
        position,
        proof_case: case,
        hypothesis_slacks: hyps,
        branch,
        l_value: l,
        bound_form: Some(form),
        c_x,
        entailed,
    })
}
