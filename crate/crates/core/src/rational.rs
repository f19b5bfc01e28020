//! Exact rational scalars.
//!
//! Every scalar in the crate is a [`Rational`]; there is no floating point.
//! Text I/O uses `"p/q"` strings (or bare integers), always in canonical form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n / d`, reduced. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Parses `"p"`, `"-p"`, or `"p/q"` (surrounding whitespace allowed).
pub fn parse(s: &str) -> Result<Rational, Error> {
    let bad = |why: &str| Error::Parse {
        input: s.to_string(),
        reason: why.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let den: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| bad("denominator is not an integer"))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p/q"` form (`"p"` for integers).
pub fn to_string(q: &Rational) -> String {
    q.to_string()
}

pub fn max(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn min(a: &Rational, b: &Rational) -> Rational {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

/// Decimal rendering with `digits` significant digits, computed exactly
/// (round half away from zero). Display only; never parsed back.
pub fn approx(q: &Rational, digits: u32) -> String {
    assert!(digits > 0);
    if q.is_zero() {
        return "0".to_string();
    }
    let neg = q.is_negative();
    let v = q.abs();
    let ten = BigInt::from(10);

    // exponent e with 10^e <= v < 10^(e+1)
    let mut e: i64 = 0;
    let pow = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    while v >= pow(e + 1) {
        e += 1;
    }
    while v < pow(e) {
        e -= 1;
    }

    let shift = digits as i64 - 1 - e;
    let scaled = &v * pow(shift);
    let (quot, rem) = scaled.numer().div_rem(scaled.denom());
    let mut m = quot;
    if rem * BigInt::from(2) >= *scaled.denom() {
        m += 1;
    }
    if m == num_traits::pow(ten.clone(), digits as usize) {
        m /= &ten;
        e += 1;
    }
    let mantissa = m.to_string();
    let shift = digits as i64 - 1 - e;

    let body = if (-5..15).contains(&e) {
        if shift <= 0 {
            let zeros = "0".repeat((-shift) as usize);
            format!("{mantissa}{zeros}")
        } else if (shift as usize) < mantissa.len() {
            let (ip, fp) = mantissa.split_at(mantissa.len() - shift as usize);
            format!("{ip}.{fp}")
        } else {
            let zeros = "0".repeat(shift as usize - mantissa.len());
            format!("0.{zeros}{mantissa}")
        }
    } else {
        let (h, t) = mantissa.split_at(1);
        if t.is_empty() {
            format!("{h}e{e}")
        } else {
            format!("{h}.{t}e{e}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Rational as it appears in JSON: a bare integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    pub fn to_rational(&self) -> Result<Rational, Error> {
        match self {
            Scalar::Int(n) => Ok(int(*n)),
            Scalar::Text(s) => parse(s),
        }
    }
}

impl From<&Rational> for Scalar {
    fn from(q: &Rational) -> Self {
        Scalar::Text(to_string(q))
    }
}

/// Wrapper printing `p/q (decimal)` for human-readable output.
pub struct Pretty<'a>(pub &'a Rational);

impl fmt::Display for Pretty<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if is_integral(self.0) {
            write!(f, "{}", self.0)
        } else {
            write!(f, "{} ({})", self.0, approx(self.0, 6))
        }
    }
}
