//! Bicomplex and hyperbolic number arithmetic, finite free modules over the
//! bicomplex ring, and bicomplex linear operators.
//!
//! The bicomplex ring is the commutative four-dimensional algebra
//! `{w0 + w1 i1 + w2 i2 + w3 j}` with `i1^2 = i2^2 = -1`, `j^2 = 1` and
//! `i1 i2 = j`. It is not a division algebra: the null-cone of zero
//! divisors consists exactly of the elements with a vanishing idempotent
//! channel. The idempotent units `e1 = (1 + j)/2`, `e2 = (1 - j)/2` split
//! the ring into two independent complex planes, and nearly everything in
//! this crate computes per channel and recombines:
//!
//! - [`scalar`]: the ring, its three conjugations, moduli, inversion and
//!   null-cone tests.
//! - [`tmodule`]: kets over the ring, scalar products (canonical and
//!   split-metric), the extended norm, bras, and the hyperbolic angle.
//! - [`operators`]: matrices as operators, the adjoint, and the
//!   eigensolver that reduces to two complex eigenproblems.
//! - [`eigen`]: the dense complex eigensolver backing the channel
//!   problems.
//! - [`oracle`]: independent basis-table arithmetic and cofactor
//!   determinants for differential testing.

pub mod complex;
pub mod eigen;
pub mod error;
pub mod hyperbolic;
pub mod operators;
pub mod oracle;
pub mod scalar;
pub mod tmodule;

pub use complex::{ComplexC1, ComplexC2};
pub use eigen::{ComplexEigenPair, ComplexMatrix, EIGEN_DIM_LIMIT, EIGEN_RESIDUAL_BOUND};
pub use error::{Error, Result};
pub use hyperbolic::Hyperbolic;
pub use operators::{
    EigenPair, EigenReport, Pairing, SpectrumCheck, TMatrix, FULL_PAIRING_LIMIT,
};
pub use scalar::{Bicomplex, Channel, Conjugation, NULL_CONE_TOL};
pub use tmodule::{
    Bra, ChannelBra, ComplexVector, HVector, SchwarzWitness, SplitMetric, TVector,
};

/// Default tolerance for predicates and checks that take one.
pub const DEFAULT_TOL: f64 = 1e-10;
