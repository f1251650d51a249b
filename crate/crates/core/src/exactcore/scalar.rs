//! Coefficient traits and the default exact rational type.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed};

/// Arbitrary-precision rational numbers; the default coefficient type.
pub type Rational = BigRational;

/// Anything usable as a polynomial coefficient.
pub trait Coeff: Num + Signed + FromPrimitive + Clone + fmt::Debug + fmt::Display {}

impl<T> Coeff for T where T: Num + Signed + FromPrimitive + Clone + fmt::Debug + fmt::Display {}

/// Coefficients with exact division, needed for rank and span computations.
///
/// `f64` satisfies the bounds, but rank decisions over floats are not
/// certificates; everything in this crate that claims a result uses [`Rational`].
pub trait Field: Coeff {}

impl<T> Field for T where T: Coeff {}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_i64<K: Coeff>(n: i64) -> K {
    K::from_i64(n).expect("integer fits the coefficient type")
}

/// True when `q` is an integer.
pub fn is_integral(q: &Rational) -> bool {
    q.is_integer()
}
