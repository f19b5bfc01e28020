//! Exact intersection theory on rank-2 lattices modelling smooth projective
//! surfaces of Picard number 2, and machine-checkable certificates for the
//! bound `h^1(D) <= c_X h^0(D)` on curve classes.
//!
//! The crate works on the numerical shadow of a surface: a gram matrix, a
//! canonical class, the two Mori cone generators and the invariants
//! `q`, `p_g`, `chi`. All arithmetic is exact.
//!
//! ```
//! use picard2::{bounds, lattice::{Surface, SurfaceModel}};
//!
//! let s = Surface::new(SurfaceModel::reference_a()).unwrap();
//! let k = bounds::c_of_x(&s);
//! assert_eq!(k.c_x.to_string(), "28");
//! ```

pub mod bounds;
pub mod cones;
pub mod error;
pub mod fuzz;
pub mod lattice;
pub mod model_file;
pub mod rational;
pub mod report;
pub mod rr;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{DivisorClass, ModelKind, Surface, SurfaceModel};
pub use rational::Rational;
