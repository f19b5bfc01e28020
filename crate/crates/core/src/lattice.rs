//! Rank-2 intersection lattice, the numerical surface model and its validation.

use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, int, Rational};

/// A divisor class by its coordinates in the model's fixed lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    pub coords: [Rational; 2],
}

impl DivisorClass {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { coords: [x, y] }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::new(int(x), int(y))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(rational::is_integral)
    }

    pub fn scale(&self, t: &Rational) -> Self {
        Self::new(&self.coords[0] * t, &self.coords[1] * t)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.coords[0], self.coords[1])
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass::new(
            &self.coords[0] + &rhs.coords[0],
            &self.coords[1] + &rhs.coords[1],
        )
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        DivisorClass::new(
            &self.coords[0] - &rhs.coords[0],
            &self.coords[1] - &rhs.coords[1],
        )
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> DivisorClass {
        DivisorClass::new(-&self.coords[0], -&self.coords[1])
    }
}

impl Mul<&DivisorClass> for &Rational {
    type Output = DivisorClass;
    fn mul(self, rhs: &DivisorClass) -> DivisorClass {
        rhs.scale(self)
    }
}

/// Gram matrix of the intersection pairing in the lattice basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    pub gram: [[Rational; 2]; 2],
}

impl IntersectionForm {
    pub fn new(gram: [[Rational; 2]; 2]) -> Self {
        Self { gram }
    }

    pub fn from_ints(g: [[i64; 2]; 2]) -> Self {
        Self::new(g.map(|row| row.map(int)))
    }

    pub fn pair(&self, d1: &DivisorClass, d2: &DivisorClass) -> Rational {
        let mut acc = Rational::zero();
        for i in 0..2 {
            for j in 0..2 {
                acc += &d1.coords[i] * &self.gram[i][j] * &d2.coords[j];
            }
        }
        acc
    }

    pub fn det(&self) -> Rational {
        &self.gram[0][0] * &self.gram[1][1] - &self.gram[0][1] * &self.gram[1][0]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    /// Kodaira dimension one with a single negative curve; `gen1` is the
    /// elliptic fibre class `F`, `gen2` the negative curve `C`.
    KodairaOne,
    /// Two negative curves `C_1 = gen1`, `C_2 = gen2` spanning the Mori cone.
    TwoNegative,
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModelKind::KodairaOne => "kodaira_one",
            ModelKind::TwoNegative => "two_negative",
        })
    }
}

/// Numerical data of a smooth projective surface with Picard number 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceModel {
    pub form: IntersectionForm,
    pub canonical: DivisorClass,
    pub q: i64,
    pub pg: i64,
    pub chi: i64,
    pub kind: ModelKind,
    pub gen1: DivisorClass,
    pub gen2: DivisorClass,
    pub iitaka_m: Option<i64>,
}

impl SurfaceModel {
    /// Two negative curves with `C_1^2 = C_2^2 = -1`, `C_1.C_2 = 2`, `K = C_1 + C_2`.
    pub fn reference_a() -> Self {
        Self {
            form: IntersectionForm::from_ints([[-1, 2], [2, -1]]),
            canonical: DivisorClass::from_ints(1, 1),
            q: 0,
            pg: 0,
            chi: 1,
            kind: ModelKind::TwoNegative,
            gen1: DivisorClass::from_ints(1, 0),
            gen2: DivisorClass::from_ints(0, 1),
            iitaka_m: None,
        }
    }

    /// Elliptic fibration with `F^2 = 0`, `C^2 = -2`, `F.C = 1`, `K = F/96`.
    pub fn reference_b() -> Self {
        Self {
            form: IntersectionForm::from_ints([[0, 1], [1, -2]]),
            canonical: DivisorClass::new(rational::frac(1, 96), int(0)),
            q: 1,
            pg: 1,
            chi: 1,
            kind: ModelKind::KodairaOne,
            gen1: DivisorClass::from_ints(1, 0),
            gen2: DivisorClass::from_ints(0, 1),
            iitaka_m: Some(96),
        }
    }

    pub fn pair(&self, d1: &DivisorClass, d2: &DivisorClass) -> Rational {
        self.form.pair(d1, d2)
    }

    pub fn self_int(&self, d: &DivisorClass) -> Rational {
        self.form.pair(d, d)
    }

    /// Evaluates every model invariant; never short-circuits.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let g = &self.form.gram;

        r.check(
            "symmetry",
            g[0][1] == g[1][0],
            format!("gram[0][1] = {}, gram[1][0] = {}", g[0][1], g[1][0]),
        );
        let det = self.form.det();
        r.check("signature", det.is_negative(), format!("det(gram) = {det}"));
        r.check("irregularity", self.q >= 0, format!("q = {}", self.q));
        r.check("geometric genus", self.pg >= 0, format!("pg = {}", self.pg));
        r.check(
            "chi",
            self.chi == 1 - self.q + self.pg,
            format!("chi = {}, 1 - q + pg = {}", self.chi, 1 - self.q + self.pg),
        );

        let gdet = generator_det(&self.gen1, &self.gen2);
        r.check(
            "independence",
            !gdet.is_zero(),
            format!("det[gen1 gen2] = {gdet}"),
        );
        let s1 = self.self_int(&self.gen1);
        let s2 = self.self_int(&self.gen2);
        let s12 = self.pair(&self.gen1, &self.gen2);
        r.check("gen1 square", !s1.is_positive(), format!("gen1^2 = {s1}"));
        r.check("gen2 square", !s2.is_positive(), format!("gen2^2 = {s2}"));
        r.check(
            "generator product",
            s12.is_positive(),
            format!("gen1.gen2 = {s12}"),
        );

        match self.kind {
            ModelKind::KodairaOne => {
                r.check("fibre isotropic", s1.is_zero(), format!("gen1^2 = {s1}"));
                r.check("negative curve", s2.is_negative(), format!("gen2^2 = {s2}"));
                let (ok, detail) = match self.iitaka_m {
                    Some(m) => (
                        m >= 86 && m.is_multiple_of(&12),
                        format!("iitaka_m = {m} (need 12 | m and m >= 86)"),
                    ),
                    None => (false, "iitaka_m missing".to_string()),
                };
                r.check("iitaka multiple", ok, detail);
                let (ok, detail) = match self.iitaka_m {
                    Some(m) if m != 0 => {
                        let expect = self.gen1.scale(&rational::frac(1, m));
                        (
                            self.canonical == expect,
                            format!("canonical = {}, gen1/m = {}", self.canonical, expect),
                        )
                    }
                    _ => (false, "no usable iitaka_m".to_string()),
                };
                r.check("canonical on fibre", ok, detail);
            }
            ModelKind::TwoNegative => {
                r.check("gen1 negative", s1.is_negative(), format!("gen1^2 = {s1}"));
                r.check("gen2 negative", s2.is_negative(), format!("gen2^2 = {s2}"));
                r.check(
                    "iitaka multiple",
                    self.iitaka_m.is_none(),
                    format!("iitaka_m = {:?} (only for kodaira_one)", self.iitaka_m),
                );
                let (ok, detail) = if gdet.is_zero() {
                    (false, "generators dependent".to_string())
                } else {
                    let (a, b) = solve(&self.gen1, &self.gen2, &gdet, &self.canonical);
                    (
                        !a.is_negative() && !b.is_negative(),
                        format!("canonical = {a}*gen1 + {b}*gen2"),
                    )
                };
                r.check("canonical effective", ok, detail);
            }
        }
        r
    }
}

fn generator_det(g1: &DivisorClass, g2: &DivisorClass) -> Rational {
    &g1.coords[0] * &g2.coords[1] - &g2.coords[0] * &g1.coords[1]
}

// Cramer's rule for d = a1*g1 + a2*g2.
fn solve(
    g1: &DivisorClass,
    g2: &DivisorClass,
    det: &Rational,
    d: &DivisorClass,
) -> (Rational, Rational) {
    let [x, y] = &d.coords;
    let a1 = (x * &g2.coords[1] - &g2.coords[0] * y) / det;
    let a2 = (&g1.coords[0] * y - x * &g1.coords[1]) / det;
    (a1, a2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{mark} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    fn check(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(Check {
            name,
            passed,
            detail,
        });
    }

    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.failures().next()
    }

    pub fn failed(&self, name: &str) -> bool {
        self.failures().any(|c| c.name == name)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A model that passed validation, with the generator data cached.
///
/// Everything that needs the Mori cone (generator coordinates, cone
/// positions, bound constants, certificates) takes a `Surface`.
#[derive(Clone, Debug)]
pub struct Surface {
    model: SurfaceModel,
    gen_det: Rational,
    gen_gram: [[Rational; 2]; 2],
    canonical_coords: (Rational, Rational),
}

impl Surface {
    pub fn new(model: SurfaceModel) -> Result<Self> {
        let report = model.validate();
        if !report.is_valid() {
            return Err(Error::InvalidModel(report));
        }
        let gen_det = generator_det(&model.gen1, &model.gen2);
        let s12 = model.pair(&model.gen1, &model.gen2);
        let gen_gram = [
            [model.self_int(&model.gen1), s12.clone()],
            [s12, model.self_int(&model.gen2)],
        ];
        let canonical_coords = solve(&model.gen1, &model.gen2, &gen_det, &model.canonical);
        Ok(Self {
            model,
            gen_det,
            gen_gram,
            canonical_coords,
        })
    }

    pub fn model(&self) -> &SurfaceModel {
        &self.model
    }

    pub fn into_model(self) -> SurfaceModel {
        self.model
    }

    /// `(a_1, a_2)` with `d = a_1 gen1 + a_2 gen2`.
    pub fn generator_coords(&self, d: &DivisorClass) -> (Rational, Rational) {
        solve(&self.model.gen1, &self.model.gen2, &self.gen_det, d)
    }

    pub fn combine(&self, a1: &Rational, a2: &Rational) -> DivisorClass {
        &self.model.gen1.scale(a1) + &self.model.gen2.scale(a2)
    }

    /// Intersection matrix of the generators: `[[g1^2, g1.g2], [g1.g2, g2^2]]`.
    pub fn generator_gram(&self) -> &[[Rational; 2]; 2] {
        &self.gen_gram
    }

    /// The canonical class in generator coordinates, `K = a gen1 + b gen2`.
    pub fn canonical_coords(&self) -> &(Rational, Rational) {
        &self.canonical_coords
    }

    /// Iitaka multiple; defined for `KodairaOne` models only.
    pub fn iitaka(&self) -> Option<Rational> {
        self.model.iitaka_m.map(int)
    }
}

impl Deref for Surface {
    type Target = SurfaceModel;
    fn deref(&self) -> &SurfaceModel {
        &self.model
    }
}
