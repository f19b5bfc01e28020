//! The constants built up in the proofs: the negativity bound `b(X)`, the
//! generator-coefficient floors, the slope/area bound `m(X)` and the final
//! cohomology ratio `c_X`.

use num_traits::One;

use crate::lattice::{ModelKind, Surface};
use crate::rational::{self, int, Rational};

/// Lower bounds on the generator coordinates of a curve class of positive
/// square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoeffFloor {
    /// Two negative curves: `a_i >= c` for both coordinates.
    Uniform(Rational),
    /// Fibred model: `a_2 >= a2_min` and `a_1 >= a1_per_a2 * a_2`.
    Fibred {
        a2_min: Rational,
        a1_per_a2: Rational,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundConstants {
    pub b_x: Rational,
    pub coeff_floor: CoeffFloor,
    /// Bound on `l_D` over curves of positive square.
    pub slope_bound: Rational,
    /// Bound on `D^2` in the small-area branch of the dichotomy.
    pub area_bound: Rational,
    pub m_x: Rational,
    pub case_values: [Rational; 4],
    pub c_x: Rational,
    /// True when `c_x` is the floor value 1 rather than a case value.
    pub floored: bool,
}

// (-C_i^2, C_1.C_2, -C_j^2) style accessors over the generator gram.
struct Gens {
    neg1: Rational,
    neg2: Rational,
    prod: Rational,
}

fn gens(s: &Surface) -> Gens {
    let g = s.generator_gram();
    Gens {
        neg1: -&g[0][0],
        neg2: -&g[1][1],
        prod: g[0][1].clone(),
    }
}

pub fn b_of_x(s: &Surface) -> Rational {
    let g = gens(s);
    match s.kind {
        ModelKind::KodairaOne => g.neg2,
        ModelKind::TwoNegative => rational::max(&g.neg1, &g.neg2),
    }
}

pub fn coeff_floor(s: &Surface) -> CoeffFloor {
    let g = gens(s);
    match s.kind {
        ModelKind::KodairaOne => CoeffFloor::Fibred {
            a2_min: Rational::one() / &g.prod,
            a1_per_a2: &g.neg2 / &g.prod,
        },
        ModelKind::TwoNegative => {
            // (C_i^2 + (C_1.C_2)^2 / (-C_j^2))^{-1}, positive by the signature
            let t = |neg_i: &Rational, neg_j: &Rational| {
                Rational::one() / (-neg_i + &g.prod * &g.prod / neg_j)
            };
            let t1 = t(&g.neg1, &g.neg2);
            let t2 = t(&g.neg2, &g.neg1);
            let candidates = [
                t1.clone(),
                &g.neg2 / &g.prod * &t1,
                t2.clone(),
                &g.neg1 / &g.prod * &t2,
            ];
            let c = candidates.iter().min().cloned().expect("four candidates");
            CoeffFloor::Uniform(c)
        }
    }
}

/// `(slope_bound, area_bound)`; `m(X)` is their maximum.
pub fn slope_and_area(s: &Surface) -> (Rational, Rational) {
    let g = gens(s);
    let two = int(2);
    match s.kind {
        ModelKind::KodairaOne => {
            let m = s.iitaka().expect("validated fibred model has iitaka_m");
            let fc2 = &g.prod * &g.prod;
            let slope = &fc2 / (&m * &g.neg2);
            let area = &two * &fc2 / (&m * &m * &g.neg2);
            (slope, area)
        }
        ModelKind::TwoNegative => {
            let c = match coeff_floor(s) {
                CoeffFloor::Uniform(c) => c,
                CoeffFloor::Fibred { .. } => unreachable!(),
            };
            let (a, b) = s.canonical_coords();
            let slope = rational::max(&(a / &c), &(b / &c));
            let p2 = &g.prod * &g.prod;
            let area = rational::max(
                &(&two * a * a * &p2 / &g.neg2),
                &(&two * b * b * &p2 / &g.neg1),
            );
            (slope, area)
        }
    }
}

pub fn m_of_x(s: &Surface) -> Rational {
    let (slope, area) = slope_and_area(s);
    rational::max(&slope, &area)
}

pub fn c_of_x(s: &Surface) -> BoundConstants {
    let (slope_bound, area_bound) = slope_and_area(s);
    let m = rational::max(&slope_bound, &area_bound);
    let b = b_of_x(s);
    let (case_values, c_x, floored) = cohomology_ratio(&int(s.q), &m, &b);
    BoundConstants {
        b_x: b,
        coeff_floor: coeff_floor(s),
        slope_bound,
        area_bound,
        m_x: m,
        case_values,
        c_x,
        floored,
    }
}

/// The four per-case values `[q, (m^2 - m + 2q)/2, (m + 2q)/2, (2q + m + b)/2]`
/// and their maximum floored at 1.
pub fn cohomology_ratio(
    q: &Rational,
    m: &Rational,
    b: &Rational,
) -> ([Rational; 4], Rational, bool) {
    let two = int(2);
    let case_values = [
        q.clone(),
        (m * m - m + &two * q) / &two,
        (m + &two * q) / &two,
        (&two * q + m + b) / &two,
    ];
    let top = case_values.iter().max().cloned().expect("four cases");
    let one = Rational::one();
    let floored = top < one;
    (case_values, rational::max(&one, &top), floored)
}
