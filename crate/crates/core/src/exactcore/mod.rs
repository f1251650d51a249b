//! Exact arithmetic: rationals, multivariate polynomials, small polynomial
//! matrices, and span comparison.

pub mod eqset;
pub mod linalg;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ring;
pub mod scalar;
pub mod span;

use thiserror::Error;

pub use eqset::EquationSet;
pub use matrix::PolyMatrix;
pub use parse::parse_poly;
pub use poly::{Monomial, Polynomial};
pub use ring::{Ring, VarId};
pub use scalar::{rat, ratio, Coeff, Field, Rational};
pub use span::{span_compare, span_equal, span_rank, SpanComparison, SpanRelation};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExactError {
    #[error("operands belong to different rings")]
    Context,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("invalid variable name {0:?}")]
    BadVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

#[cfg(test)]
mod tests;
