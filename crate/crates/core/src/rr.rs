//! Numerical Riemann–Roch.
//!
//! `h^0 - h^1 + h^2 = chi(O_X) + (D^2 - K.D)/2`, together with `h^2 <= p_g`,
//! turns into a linear bound `h^1 <= alpha h^0 + beta` whose shape depends on
//! the sign of `D^2`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cones::{self, ConePosition};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Surface, SurfaceModel};
use crate::rational::{self, int, Rational};

/// The statement `h^1 <= alpha * h^0 + beta` for every `h^0` in
/// `[h0_min, h0_max]` (unbounded above when `h0_max` is `None`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundForm {
    pub alpha: Rational,
    pub beta: Rational,
    pub h0_min: Rational,
    pub h0_max: Option<Rational>,
}

impl BoundForm {
    /// Whether the form admits the given cohomology values.
    pub fn admits(&self, h0: &Rational, h1: &Rational) -> bool {
        h1 <= &(&self.alpha * h0 + &self.beta)
    }

    pub fn covers(&self, h0: &Rational) -> bool {
        h0 >= &self.h0_min && self.h0_max.as_ref().is_none_or(|hi| h0 <= hi)
    }
}

impl fmt::Display for BoundForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lead = if self.alpha.is_zero() {
            String::new()
        } else if self.alpha.is_one() {
            "h0 ".to_string()
        } else {
            format!("{}*h0 ", self.alpha)
        };
        let (op, b) = if lead.is_empty() {
            ("", self.beta.clone())
        } else if self.beta.is_negative() {
            ("- ", -self.beta.clone())
        } else {
            ("+ ", self.beta.clone())
        };
        write!(f, "h1 <= {lead}{op}{b} for h0 >= {}", self.h0_min)?;
        if let Some(hi) = &self.h0_max {
            write!(f, ", h0 <= {hi}")?;
        }
        Ok(())
    }
}

pub fn euler_char(model: &SurfaceModel, d: &DivisorClass) -> Rational {
    let d2 = model.self_int(d);
    let kd = model.pair(&model.canonical, d);
    int(model.chi) + (d2 - kd) / int(2)
}

/// Upper bound for `h^2(D) = h^0(K - D)`, namely `p_g`.
pub fn serre_h2_bound(model: &SurfaceModel) -> Rational {
    int(model.pg)
}

/// `K.D / max{1, D^2}` when `D^2 != 0`, and `K.D / max{1, h^0}` otherwise
/// (with `h^0` taken as 1 when no hint is given).
pub fn l_value(model: &SurfaceModel, d: &DivisorClass, h0_hint: Option<u64>) -> Rational {
    let d2 = model.self_int(d);
    let kd = model.pair(&model.canonical, d);
    let denom = if d2.is_zero() {
        int(h0_hint.unwrap_or(1).max(1) as i64)
    } else {
        rational::max(&Rational::one(), &d2)
    };
    kd / denom
}

/// Per-case bound form for a nonzero class in the Mori cone.
pub fn h1_bound_form(s: &Surface, d: &DivisorClass) -> Result<BoundForm> {
    match cones::position(s, d) {
        ConePosition::Zero => return Err(Error::ZeroClass),
        ConePosition::Outside => {
            return Err(Error::OutsideCone(
                d.coords[0].to_string(),
                d.coords[1].to_string(),
            ))
        }
        _ => {}
    }
    let q = int(s.q);
    let one = Rational::one();
    let two = int(2);
    let d2 = s.self_int(d);
    let kd = s.pair(&s.canonical, d);

    let form = if d2.is_positive() {
        // h^0 = chi(D) + h^1 - h^2 >= chi(D) - p_g
        let from_rr = euler_char(s, d) - serre_h2_bound(s);
        BoundForm {
            alpha: one.clone(),
            beta: (&q - &one) + (&kd - &d2) / &two,
            h0_min: rational::max(&one, &from_rr),
            h0_max: None,
        }
    } else if d2.is_zero() {
        BoundForm {
            alpha: one.clone(),
            beta: (&q - &one) + &kd / &two,
            h0_min: one,
            h0_max: None,
        }
    } else {
        BoundForm {
            alpha: Rational::zero(),
            beta: q + (kd - d2) / two,
            h0_min: one.clone(),
            h0_max: Some(one),
        }
    };
    Ok(form)
}

/// Whether `form` implies `h^1 <= c * h^0`.
///
/// `h^0` and `h^1` are dimensions, so `h^0` runs over integers in the
/// form's range and, when `alpha` is an integer, the bound can be taken as
/// `h^1 <= alpha h^0 + floor(beta)`.
pub fn entails(form: &BoundForm, c: &Rational) -> bool {
    let lo = form.h0_min.ceil();
    let hi = form.h0_max.as_ref().map(|h| h.floor());
    if hi.as_ref().is_some_and(|hi| hi < &lo) {
        return true;
    }
    let beta = if rational::is_integral(&form.alpha) {
        form.beta.floor()
    } else {
        form.beta.clone()
    };
    let slope = c - &form.alpha;
    let ok_at = |h: &Rational| &slope * h >= beta;
    match hi {
        None => !slope.is_negative() && ok_at(&lo),
        Some(hi) => ok_at(&lo) && ok_at(&hi),
    }
}
