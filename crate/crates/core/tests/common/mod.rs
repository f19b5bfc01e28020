#![allow(dead_code)]

pub mod oracle;

use picard2::{DivisorClass, Surface, SurfaceModel};

pub fn model_a() -> Surface {
    Surface::new(SurfaceModel::reference_a()).unwrap()
}

pub fn model_b() -> Surface {
    Surface::new(SurfaceModel::reference_b()).unwrap()
}

/// Nonzero integral classes in `[-n, n]^2`.
pub fn box_classes(n: i64) -> impl Iterator<Item = DivisorClass> {
    (-n..=n)
        .flat_map(move |x| (-n..=n).map(move |y| (x, y)))
        .filter(|&p| p != (0, 0))
        .map(|(x, y)| DivisorClass::from_ints(x, y))
}
