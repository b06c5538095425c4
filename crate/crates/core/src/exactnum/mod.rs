//! Exact arithmetic foundation: big rationals, the field generated by a
//! primitive cube root of unity, integer matrices with Smith normal form,
//! and univariate rational functions over the rationals.

mod eisenstein;
mod matrix;
mod poly;
mod ratfun;

pub use eisenstein::EisensteinScalar;
pub use matrix::{smith_normal_form, IntMatrix, SmithNormalForm};
pub use poly::UniPoly;
pub use ratfun::RationalFunction;

use core::fmt;

/// The base field of coefficients. Always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub use num_bigint::BigInt;

/// Rational from an integer literal.
pub fn rat(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Errors raised by the exact-arithmetic layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactError {
    /// Inversion or division by zero.
    DivisionByZero,
    /// A square matrix was required.
    NonSquare,
    /// A rational function was given a denominator whose constant term is
    /// zero, or a series inversion hit constant term zero.
    ZeroConstantTerm,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::DivisionByZero => write!(f, "division by zero"),
            ExactError::NonSquare => write!(f, "matrix is not square"),
            ExactError::ZeroConstantTerm => write!(f, "constant term is zero"),
        }
    }
}

impl core::error::Error for ExactError {}
