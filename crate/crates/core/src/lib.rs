//! Exact verification of a cubic Jordan algebra presentation of a key variety
//! attached to 2x2x2 hypermatrices, and of its relatives.

pub mod exactcore;
pub mod coord8;
pub mod grading;
pub mod hvariety;
pub mod cli;
pub mod jordan;
pub mod relatives;
pub mod report;
pub mod sampling;

pub use exactcore::{Field, Coeff};

/// Arbitrary-precision rationals; every certificate is computed over these.
pub type Rational = exactcore::Rational;
/// Polynomials with rational coefficients.
pub type Poly = exactcore::Polynomial<Rational>;
/// Matrices of rational polynomials.
pub type QMatrix = exactcore::PolyMatrix<Rational>;
