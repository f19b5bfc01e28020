//! Certificates and the box sweep.
//!
//! A [`Certificate`] records, for one integral class, which case of the
//! cohomology argument applies and the exact slack of every inequality the
//! argument uses. A certificate is accepted iff every slack has its required
//! sign and the bound form entails `h^1 <= c_X h^0`.
//!
//! Classes that do not satisfy a lemma's numerical curve hypotheses are
//! counted as [`ProofCase::SkippedHypothesis`] rather than checked: the
//! arguments only apply to curves, and integral cone classes meeting those
//! hypotheses are the checkable superset.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::bounds::{self, BoundConstants, CoeffFloor};
use crate::cones::{self, ConePosition};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, ModelKind, Surface, SurfaceModel};
use crate::rational::{self, int, Rational};
use crate::rr::{self, BoundForm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProofCase {
    BigClass,
    ZeroSquare,
    NegativeRay,
    SkippedHypothesis,
    OutsideCone,
}

impl ProofCase {
    pub const ALL: [ProofCase; 5] = [
        ProofCase::BigClass,
        ProofCase::ZeroSquare,
        ProofCase::NegativeRay,
        ProofCase::SkippedHypothesis,
        ProofCase::OutsideCone,
    ];

    /// Whether certificates of this case are held to their slacks.
    pub fn is_checked(self) -> bool {
        matches!(
            self,
            ProofCase::BigClass | ProofCase::ZeroSquare | ProofCase::NegativeRay
        )
    }
}

impl fmt::Display for ProofCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    NonNegative,
    Negative,
    NonPositive,
}

impl Sign {
    pub fn admits(self, v: &Rational) -> bool {
        match self {
            Sign::Positive => v.is_positive(),
            Sign::NonNegative => !v.is_negative(),
            Sign::Negative => v.is_negative(),
            Sign::NonPositive => !v.is_positive(),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Positive => "> 0",
            Sign::NonNegative => ">= 0",
            Sign::Negative => "< 0",
            Sign::NonPositive => "<= 0",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slack {
    pub label: &'static str,
    pub value: Rational,
    pub sign: Sign,
}

impl Slack {
    pub fn new(label: &'static str, value: Rational, sign: Sign) -> Self {
        Self { label, value, sign }
    }

    pub fn holds(&self) -> bool {
        self.sign.admits(&self.value)
    }
}

impl fmt::Display for Slack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds() { "ok" } else { "FAILED" };
        write!(
            f,
            "{}: {} (need {}) {mark}",
            self.label,
            rational::Pretty(&self.value),
            self.sign.symbol()
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchLabel {
    /// `(K - D).D` has the sign that forces `h^1 <= q h^0`.
    NefSide,
    /// `D^2` is bounded by the area constant.
    SmallArea,
}

impl fmt::Display for BranchLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BranchLabel::NefSide => "nef-side",
            BranchLabel::SmallArea => "small-area",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub label: BranchLabel,
    /// The predicate selecting this branch.
    pub defining: Slack,
    /// What the branch concludes.
    pub conclusion: Slack,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub class: DivisorClass,
    pub position: ConePosition,
    pub proof_case: ProofCase,
    pub hypothesis_slacks: Vec<Slack>,
    pub branch: Option<Branch>,
    pub l_value: Rational,
    pub bound_form: Option<BoundForm>,
    pub c_x: Rational,
    pub entailed: bool,
}

impl Certificate {
    /// Labels of every failed requirement; empty for accepted or unchecked
    /// certificates.
    pub fn failures(&self) -> Vec<&'static str> {
        if !self.proof_case.is_checked() {
            return Vec::new();
        }
        let mut out: Vec<&'static str> = self
            .hypothesis_slacks
            .iter()
            .chain(
                self.branch
                    .iter()
                    .flat_map(|b| [&b.defining, &b.conclusion]),
            )
            .filter(|s| !s.holds())
            .map(|s| s.label)
            .collect();
        if !self.entailed {
            out.push("h1 <= c_X h0 entailed");
        }
        out
    }

    pub fn is_violation(&self) -> bool {
        !self.failures().is_empty()
    }

    pub fn slack(&self, label: &str) -> Option<&Slack> {
        self.hypothesis_slacks.iter().find(|s| s.label == label)
    }
}

pub mod labels {
    pub const FIBRE_DEGREE: &str = "D.F >= 1";
    pub const MEETS_C: &str = "D.C >= 0";
    pub const MEETS_C1: &str = "D.C1 >= 0";
    pub const MEETS_C2: &str = "D.C2 >= 0";
    pub const BNC: &str = "D^2 >= -b(X)";
    pub const RAY_SQUARE: &str = "ray class D^2 <= 0";
    pub const POSITIVE_SQUARE: &str = "D^2 > 0";
    pub const FLOOR_A2: &str = "a2 >= 1/(F.C)";
    pub const FLOOR_A1: &str = "a1 >= a2 (-C^2)/(F.C)";
    pub const FLOOR_C_A1: &str = "a1 >= c";
    pub const FLOOR_C_A2: &str = "a2 >= c";
    pub const SLOPE: &str = "l_D <= m(X)";
    pub const AREA_CLAUSE: &str = "D^2 <= m(X) h0_min";
    pub const FIBRE_NEF: &str = "m a1 - 1 >= 0";
    pub const FIBRE_SMALL: &str = "m a1 - 1 < 0";
    pub const FIBRE_NEF_CONCL: &str = "(D - K).D >= 0";
    pub const FIBRE_SMALL_CONCL: &str = "D^2 < 2 m^-2 (F.C)^2 / (-C^2)";
    pub const TWO_NEF: &str = "min(a1 - a, a2 - b) > 0";
    pub const TWO_SMALL: &str = "min(a1 - a, a2 - b) <= 0";
    pub const TWO_NEF_CONCL: &str = "(D - K).D > 0";
    pub const TWO_SMALL_CONCL: &str = "D^2 <= area bound";
}

/// Certifies classes of one surface against its bound constants.
#[derive(Clone, Debug)]
pub struct Verifier<'a> {
    surface: &'a Surface,
    constants: BoundConstants,
    c_x: Rational,
}

impl<'a> Verifier<'a> {
    pub fn new(surface: &'a Surface) -> Self {
        let constants = bounds::c_of_x(surface);
        let c_x = constants.c_x.clone();
        Self {
            surface,
            constants,
            c_x,
        }
    }

    /// Replaces the `c_X` used for entailment (the other constants stay).
    pub fn with_c_x(mut self, c_x: Rational) -> Self {
        self.c_x = c_x;
        self
    }

    pub fn surface(&self) -> &Surface {
        self.surface
    }

    pub fn constants(&self) -> &BoundConstants {
        &self.constants
    }

    pub fn c_x(&self) -> &Rational {
        &self.c_x
    }

    pub fn certify(&self, d: &DivisorClass) -> Result<Certificate> {
        use labels::*;
        use Sign::*;

        if d.is_zero() {
            return Err(Error::ZeroClass);
        }
        let s = self.surface;
        let (a1, a2) = s.generator_coords(d);
        let position = cones::classify_coords(&a1, &a2);
        let l = rr::l_value(s, d, None);

        if position == ConePosition::Outside {
            return Ok(Certificate {
                class: d.clone(),
                position,
                proof_case: ProofCase::OutsideCone,
                hypothesis_slacks: Vec::new(),
                branch: None,
                l_value: l,
                bound_form: None,
                c_x: self.c_x.clone(),
                entailed: false,
            });
        }

        let d2 = s.self_int(d);
        let kd = s.pair(&s.canonical, d);
        let form = rr::h1_bound_form(s, d)?;
        let k = &self.constants;
        let mut slacks = Vec::new();
        let mut branch = None;

        let proof_case = if position.on_ray() {
            if d2.is_negative() {
                slacks.push(Slack::new(BNC, &d2 + &k.b_x, NonNegative));
                if slacks[0].holds() {
                    ProofCase::NegativeRay
                } else {
                    ProofCase::SkippedHypothesis
                }
            } else if d2.is_zero() {
                ProofCase::ZeroSquare
            } else {
                slacks.push(Slack::new(RAY_SQUARE, -&d2, NonNegative));
                ProofCase::SkippedHypothesis
            }
        } else {
            let d_gen1 = s.pair(d, &s.gen1);
            let d_gen2 = s.pair(d, &s.gen2);
            match s.kind {
                ModelKind::KodairaOne => {
                    slacks.push(Slack::new(FIBRE_DEGREE, d_gen1 - int(1), NonNegative));
                    slacks.push(Slack::new(MEETS_C, d_gen2, NonNegative));
                }
                ModelKind::TwoNegative => {
                    slacks.push(Slack::new(MEETS_C1, d_gen1, NonNegative));
                    slacks.push(Slack::new(MEETS_C2, d_gen2, NonNegative));
                }
            }
            if slacks.iter().all(Slack::holds) {
                self.big_class_slacks(&mut slacks, &a1, &a2, &d2, &l, &form);
                branch = Some(self.dichotomy(&a1, &a2, &d2, &kd));
                ProofCase::BigClass
            } else {
                ProofCase::SkippedHypothesis
            }
        };

        let entailed = rr::entails(&form, &self.c_x);
        Ok(Certificate {
            class: d.clone(),
            position,
            proof_case,
            hypothesis_slacks: slacks,
            branch,
            l_value: l,
            bound_form: Some(form),
            c_x: self.c_x.clone(),
            entailed,
        })
    }

    fn big_class_slacks(
        &self,
        slacks: &mut Vec<Slack>,
        a1: &Rational,
        a2: &Rational,
        d2: &Rational,
        l: &Rational,
        form: &BoundForm,
    ) {
        use labels::*;
        use Sign::*;
        let k = &self.constants;

        slacks.push(Slack::new(POSITIVE_SQUARE, d2.clone(), Positive));
        match &k.coeff_floor {
            CoeffFloor::Fibred { a2_min, a1_per_a2 } => {
                slacks.push(Slack::new(FLOOR_A2, a2 - a2_min, NonNegative));
                slacks.push(Slack::new(FLOOR_A1, a1 - a1_per_a2 * a2, NonNegative));
            }
            CoeffFloor::Uniform(c) => {
                slacks.push(Slack::new(FLOOR_C_A1, a1 - c, NonNegative));
                slacks.push(Slack::new(FLOOR_C_A2, a2 - c, NonNegative));
            }
        }
        slacks.push(Slack::new(SLOPE, &k.m_x - l, NonNegative));
        if l > &Rational::one() {
            slacks.push(Slack::new(
                AREA_CLAUSE,
                &k.m_x * &form.h0_min - d2,
                NonNegative,
            ));
        }
    }

    fn dichotomy(&self, a1: &Rational, a2: &Rational, d2: &Rational, kd: &Rational) -> Branch {
        use labels::*;
        use Sign::*;
        let s = self.surface;
        let area = &self.constants.area_bound;
        match s.kind {
            ModelKind::KodairaOne => {
                let m = s.iitaka().expect("validated fibred model has iitaka_m");
                let v = m * a1 - int(1);
                if !v.is_negative() {
                    Branch {
                        label: BranchLabel::NefSide,
                        defining: Slack::new(FIBRE_NEF, v, NonNegative),
                        conclusion: Slack::new(FIBRE_NEF_CONCL, d2 - kd, NonNegative),
                    }
                } else {
                    Branch {
                        label: BranchLabel::SmallArea,
                        defining: Slack::new(FIBRE_SMALL, v, Negative),
                        conclusion: Slack::new(FIBRE_SMALL_CONCL, area - d2, Positive),
                    }
                }
            }
            ModelKind::TwoNegative => {
                let (a, b) = s.canonical_coords();
                let v = rational::min(&(a1 - a), &(a2 - b));
                if v.is_positive() {
                    Branch {
                        label: BranchLabel::NefSide,
                        defining: Slack::new(TWO_NEF, v, Positive),
                        conclusion: Slack::new(TWO_NEF_CONCL, d2 - kd, Positive),
                    }
                } else {
                    Branch {
                        label: BranchLabel::SmallArea,
                        defining: Slack::new(TWO_SMALL, v, NonPositive),
                        conclusion: Slack::new(TWO_SMALL_CONCL, area - d2, NonNegative),
                    }
                }
            }
        }
    }

    /// Certifies every nonzero integral class in `[-n, n]^2`, rows spread
    /// over `jobs` worker threads (all available when `None`).
    pub fn verify_box(&self, n: u32, jobs: Option<usize>) -> VerificationReport {
        let start = Instant::now();
        let n = n as i64;
        let sweep = || -> Vec<Certificate> {
            (-n..=n)
                .into_par_iter()
                .flat_map_iter(|x| {
                    (-n..=n).filter_map(move |y| {
                        let d = DivisorClass::from_ints(x, y);
                        (!d.is_zero()).then(|| self.certify(&d).expect("nonzero class"))
                    })
                })
                .collect()
        };
        let certs = match jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .expect("thread pool")
                .install(sweep),
            None => sweep(),
        };

        let mut counts: BTreeMap<ProofCase, u64> = ProofCase::ALL.iter().map(|c| (*c, 0)).collect();
        let mut violations = Vec::new();
        let mut min_slope: Option<Rational> = None;
        let mut extremes = Vec::new();
        // certs arrive in lexicographic (x, y) order
        for cert in certs {
            *counts.entry(cert.proof_case).or_default() += 1;
            if cert.proof_case == ProofCase::BigClass {
                if let Some(sl) = cert.slack(labels::SLOPE) {
                    if sl.value.is_zero() {
                        extremes.push(cert.class.clone());
                    }
                    if min_slope.as_ref().is_none_or(|m| &sl.value < m) {
                        min_slope = Some(sl.value.clone());
                    }
                }
            }
            let failed = cert.failures();
            if !failed.is_empty() {
                violations.push(Violation {
                    failed,
                    certificate: cert,
                });
            }
        }

        VerificationReport {
            model: self.surface.model().clone(),
            box_radius: n as u32,
            constants: self.constants.clone(),
            c_x_used: self.c_x.clone(),
            counts,
            violations,
            min_slope_slack: min_slope,
            attained_extremes: extremes,
            wall_time: start.elapsed(),
        }
    }
}

pub fn certify(s: &Surface, d: &DivisorClass) -> Result<Certificate> {
    Verifier::new(s).certify(d)
}

pub fn verify_box(s: &Surface, n: u32) -> VerificationReport {
    Verifier::new(s).verify_box(n, None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub failed: Vec<&'static str>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub model: SurfaceModel,
    pub box_radius: u32,
    pub constants: BoundConstants,
    pub c_x_used: Rational,
    pub counts: BTreeMap<ProofCase, u64>,
    pub violations: Vec<Violation>,
    /// Minimum of `m(X) - l_D` over `BigClass` certificates.
    pub min_slope_slack: Option<Rational>,
    /// `BigClass` classes where `l_D = m(X)`.
    pub attained_extremes: Vec<DivisorClass>,
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, case: ProofCase) -> u64 {
        self.counts.get(&case).copied().unwrap_or(0)
    }
}
