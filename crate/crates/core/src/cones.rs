//! Mori cone and nef cone for Picard number 2.
//!
//! The Mori cone is spanned by the two generators of the model. A class is
//! nef iff it meets both generators non-negatively; written in generator
//! coordinates this is a pair of half-planes.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::lattice::{DivisorClass, ModelKind, Surface};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConePosition {
    Zero,
    Ray1,
    Ray2,
    Interior,
    Outside,
}

impl ConePosition {
    pub fn in_cone(self) -> bool {
        !matches!(self, ConePosition::Outside)
    }

    pub fn on_ray(self) -> bool {
        matches!(self, ConePosition::Ray1 | ConePosition::Ray2)
    }
}

impl fmt::Display for ConePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn position(s: &Surface, d: &DivisorClass) -> ConePosition {
    let (a1, a2) = s.generator_coords(d);
    classify_coords(&a1, &a2)
}

pub(crate) fn classify_coords(a1: &Rational, a2: &Rational) -> ConePosition {
    match (a1.is_zero(), a2.is_zero()) {
        (true, true) => ConePosition::Zero,
        _ if a1.is_negative() || a2.is_negative() => ConePosition::Outside,
        (false, true) => ConePosition::Ray1,
        (true, false) => ConePosition::Ray2,
        (false, false) => ConePosition::Interior,
    }
}

pub fn is_nef(s: &Surface, d: &DivisorClass) -> bool {
    !s.pair(d, &s.gen1).is_negative() && !s.pair(d, &s.gen2).is_negative()
}

pub fn is_big(s: &Surface, d: &DivisorClass) -> bool {
    position(s, d) == ConePosition::Interior
}

/// `on_a1 * a_1 + on_a2 * a_2 >= 0` in generator coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfPlane {
    pub on_a1: Rational,
    pub on_a2: Rational,
}

impl HalfPlane {
    pub fn holds(&self, a1: &Rational, a2: &Rational) -> bool {
        !(&self.on_a1 * a1 + &self.on_a2 * a2).is_negative()
    }
}

impl fmt::Display for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Render as "lhs >= rhs" with positive coefficients on each side.
        let side = |c: &Rational, v: &str| -> Option<String> {
            if c.is_zero() {
                None
            } else if c.abs() == Rational::from_integer(1.into()) {
                Some(v.to_string())
            } else {
                Some(format!("{}*{v}", c.abs()))
            }
        };
        let mut lhs = Vec::new();
        let mut rhs = Vec::new();
        for (c, v) in [(&self.on_a1, "a1"), (&self.on_a2, "a2")] {
            if let Some(t) = side(c, v) {
                if c.is_positive() {
                    lhs.push(t)
                } else {
                    rhs.push(t)
                }
            }
        }
        let join = |v: Vec<String>| {
            if v.is_empty() {
                "0".to_string()
            } else {
                v.join(" + ")
            }
        };
        write!(f, "{} >= {}", join(lhs), join(rhs))
    }
}

/// The nef cone as two half-planes in generator coordinates, listed as
/// `d.gen2 >= 0` first and `d.gen1 >= 0` second.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NefConeDescription {
    pub kind: ModelKind,
    pub inequalities: [HalfPlane; 2],
}

impl NefConeDescription {
    pub fn contains(&self, a1: &Rational, a2: &Rational) -> bool {
        self.inequalities.iter().all(|h| h.holds(a1, a2))
    }
}

/// For two negative curves: `a_1 (C_1.C_2) - a_2 (-C_2^2) >= 0` and
/// `a_2 (C_1.C_2) - a_1 (-C_1^2) >= 0`. For the fibred model the same
/// computation with `F^2 = 0` gives `a_1 (F.C) >= a_2 (-C^2)` and
/// `a_2 (F.C) >= 0`.
pub fn nef_cone(s: &Surface) -> NefConeDescription {
    let g = s.generator_gram();
    let (s1, s12, s2) = (&g[0][0], &g[0][1], &g[1][1]);
    NefConeDescription {
        kind: s.kind,
        inequalities: [
            HalfPlane {
                on_a1: s12.clone(),
                on_a2: s2.clone(),
            },
            HalfPlane {
                on_a1: s1.clone(),
                on_a2: s12.clone(),
            },
        ],
    }
}
