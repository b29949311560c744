//! Exact arithmetic core.
//!
//! Everything here is exact over `Rational` except [`eval_complex`] and the
//! root finders in [`numeric`], which are the floating-point oracles used to
//! cross-check exact results.

mod divide;
mod matrix;
mod newton;
pub mod numeric;
mod poly;
mod ratfun;
mod text;

use alloc::string::String;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use matrix::{Matrix2, RingElem};
pub use newton::NewtonPolygon;
pub use numeric::eval_complex;
pub use poly::{ArithOp, MultiPoly};
pub use ratfun::RationalFunction;

/// Arbitrary-precision rational scalar, always kept in lowest terms.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// `num / den` in lowest terms.
///
/// # Panics
/// If `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VarMismatch { left: alloc::vec::Vec<String>, right: alloc::vec::Vec<String> },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("negative exponent in non-Laurent variable `{0}`")]
    NegativeExponent(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("resultant undefined: {0}")]
    UndefinedResultant(String),
    #[error("empty input: {0}")]
    EmptyInput(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("not an exact multiple")]
    Inexact,
    #[error("parse error: {0}")]
    Parse(String),
}
