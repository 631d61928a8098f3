//! Exact verification of the symmetric six-vertex Yang-Baxter triple.
//!
//! * [`exactalg`]: rationals, projective points and dense exact matrices.
//! * [`vertex`]: Lax operator, R-matrix, the Yang-Baxter relations and `F`.
//! * [`spectral`]: the three-parameter solution, the divisor `Y` and its
//!   additive form, and the group law on the quadric `D`.
//! * [`geometry`]: Segre embedding, the threefold X, the Segre cubic and the
//!   birational maps between them.
//! * [`transfer`]: transfer matrices, commutation, partition functions and a
//!   brute-force lattice oracle.
//! * [`sampling`]: seeded random inputs for the randomized checks.
#![forbid(unsafe_code)]

pub mod error;
pub mod exactalg;
pub mod geometry;
pub mod sampling;
pub mod spectral;
pub mod transfer;
pub mod vertex;

pub use error::{Error, Result};
pub use exactalg::{Matrix, P3Point, P4Point, P8Point, ProjPoint, Rational};
pub use spectral::{DivisorParams, SpectralTriple};
pub use vertex::{Delta, RWeights, Weights};
