//! Weighted projective hypersurface embeddings of normal affine C*-surfaces.
//!
//! A surface is given by a DPD pair `(D+, D-)` of Q-divisors on the affine
//! line. The crate normalizes the pair, compiles it into a weighted
//! homogeneous equation `F(x, y, z, s)` together with its weights, certifies
//! normality and smoothness where a closed criterion exists, and verifies
//! each construction symbolically (homogeneity, parametrization by
//! `x = s^e+ u`, cyclic-group characters, generator relations).
//!
//! The polynomial layer in [`algebra`] is generic over any exact ordered
//! [`algebra::Field`]; everything above it works over [`Rational`].

pub mod algebra;
pub mod divisor;
pub mod dpd;
pub mod embedding;
mod error;
pub mod gizatullin;
pub mod report;
pub mod text;
pub mod util;
pub mod verify;

pub use error::{Error, Result};

/// Arbitrary precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Univariate polynomial over the rationals (variable `t` or `s`).
pub type QPoly = algebra::UniPoly<Rational>;
/// Rational function in one variable over the rationals.
pub type QRatFunc = algebra::RationalFunction<Rational>;
/// Sparse multivariate polynomial over the rationals.
pub type QMultiPoly = algebra::MultiPoly<Rational>;
/// Element of `Q(t)[u, u^-1]`.
pub type QLaurent = algebra::Laurent<Rational>;

pub use divisor::QDivisor;
pub use dpd::{DpdPair, NormalFormData, Transcript};
pub use embedding::{CoveringPresentation, EmbeddingData};
pub use gizatullin::{GizatullinParams, PlaneEmbedding};
