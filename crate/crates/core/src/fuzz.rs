//! Random valid models and classes for property tests and the demo.
//!
//! The intersection matrix of the generators is sampled with small integer
//! entries in `[-9, 9]` subject to the kind constraints, then expressed in a
//! lattice basis obtained from a random unimodular change of basis, so the
//! lattice gram stays integral and the generators are integral vectors.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::lattice::{DivisorClass, IntersectionForm, ModelKind, Surface, SurfaceModel};
use crate::rational::{frac, Rational};

type Mat = [[i64; 2]; 2];

fn mul(a: &Mat, b: &Mat) -> Mat {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn transpose(a: &Mat) -> Mat {
    [[a[0][0], a[1][0]], [a[0][1], a[1][1]]]
}

fn unimodular<R: Rng>(rng: &mut R) -> Mat {
    let mut p: Mat = [[1, 0], [0, 1]];
    for _ in 0..rng.random_range(0..=3) {
        let t = rng.random_range(-2..=2);
        let e = if rng.random_bool(0.5) {
            [[1, t], [0, 1]]
        } else {
            [[1, 0], [t, 1]]
        };
        p = mul(&p, &e);
    }
    p
}

fn inverse(p: &Mat) -> Mat {
    let det = p[0][0] * p[1][1] - p[0][1] * p[1][0];
    debug_assert!(det == 1 || det == -1);
    [
        [p[1][1] * det, -p[0][1] * det],
        [-p[1][0] * det, p[0][0] * det],
    ]
}

/// Generator intersection matrix for the given kind.
fn generator_gram<R: Rng>(rng: &mut R, kind: ModelKind) -> Mat {
    loop {
        let prod = rng.random_range(1..=9);
        let neg2 = rng.random_range(1..=9);
        let g11 = match kind {
            ModelKind::KodairaOne => 0,
            ModelKind::TwoNegative => -rng.random_range(1..=9),
        };
        // signature (1,1): det < 0
        if g11 * -neg2 - prod * prod < 0 {
            return [[g11, prod], [prod, -neg2]];
        }
    }
}

fn small_nonneg<R: Rng>(rng: &mut R) -> Rational {
    frac(rng.random_range(0..=4), rng.random_range(1..=3))
}

pub fn random_model<R: Rng>(rng: &mut R, kind: ModelKind) -> SurfaceModel {
    let gg = generator_gram(rng, kind);
    let p = unimodular(rng);
    let pinv = inverse(&p);
    let lattice = mul(&mul(&transpose(&pinv), &gg), &pinv);
    let gen1 = DivisorClass::from_ints(p[0][0], p[1][0]);
    let gen2 = DivisorClass::from_ints(p[0][1], p[1][1]);

    let (canonical, iitaka_m) = match kind {
        ModelKind::KodairaOne => {
            let m = 12 * rng.random_range(8..=12);
            (gen1.scale(&frac(1, m)), Some(m))
        }
        ModelKind::TwoNegative => {
            let a = small_nonneg(rng);
            let b = small_nonneg(rng);
            (&gen1.scale(&a) + &gen2.scale(&b), None)
        }
    };
    let q = rng.random_range(0..=3);
    let pg = rng.random_range(0..=3);
    SurfaceModel {
        form: IntersectionForm::from_ints(lattice),
        canonical,
        q,
        pg,
        chi: 1 - q + pg,
        kind,
        gen1,
        gen2,
        iitaka_m,
    }
}

/// `count` validated models from a fixed seed, alternating kinds.
pub fn random_surfaces(seed: u64, count: usize) -> Vec<Surface> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let kind = if i % 2 == 0 {
                ModelKind::TwoNegative
            } else {
                ModelKind::KodairaOne
            };
            Surface::new(random_model(&mut rng, kind)).expect("generated model is valid")
        })
        .collect()
}

/// A class with coordinates `n/d`, `|n| <= max_num`, `1 <= d <= max_den`.
pub fn random_class<R: Rng>(rng: &mut R, max_num: i64, max_den: i64) -> DivisorClass {
    let mut c = || {
        frac(
            rng.random_range(-max_num..=max_num),
            rng.random_range(1..=max_den),
        )
    };
    let x = c();
    let y = c();
    DivisorClass::new(x, y)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
