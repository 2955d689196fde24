//! Exact polynomial algebra over an ordered field: dense univariate
//! polynomials, rational functions, sparse multivariate polynomials and the
//! Laurent ring `K(t)[u, u^-1]`.

mod field;
mod laurent;
mod multipoly;
mod ratfunc;
mod unipoly;

pub use field::Field;
pub use laurent::Laurent;
pub use multipoly::{Monomial, MultiPoly, WeightVector, WeightedDegree, XYZS};
pub use ratfunc::RationalFunction;
pub use unipoly::UniPoly;
