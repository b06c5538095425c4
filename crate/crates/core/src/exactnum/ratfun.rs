//! Rational functions in one variable over the rationals, kept in a canonical
//! reduced form so equality is structural.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_traits::Zero;

use super::{ExactError, Rational, UniPoly};

/// `num / den` in lowest terms, with the denominator normalized to constant
/// term one. Every denominator arising here (graph determinants and their
/// factors) has a nonzero constant term, so the normalization is total on the
/// values we construct; anything else is rejected when reducing.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    /// Reduces `num/den` to canonical form.
    pub fn reduce(num: UniPoly, den: UniPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_zero() || g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let c = den.constant_term();
        if c.is_zero() {
            return Err(ExactError::ZeroConstantTerm);
        }
        let inv = c.recip();
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality by cross-multiplication, without relying on canonical form.
    pub fn cross_eq(&self, other: &RationalFunction) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Reciprocal; fails when the numerator has constant term zero, since the
    /// result could not be normalized.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.num.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Self::reduce(self.den.clone(), self.num.clone())
    }

    /// Value of the underlying power series at `t = 0`.
    pub fn constant_term(&self) -> Rational {
        self.num.constant_term()
    }

    /// First `n + 1` coefficients of the power-series expansion around zero,
    /// solved from `num = den * series` degree by degree (den(0) = 1).
    pub fn series_coefficients(&self, n: usize) -> Vec<Rational> {
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut c = self.num.coeff(k);
            for j in 1..=k {
                let d = self.den.coeff(j);
                if !d.is_zero() {
                    c = c - d * &out[k - j];
                }
            }
            out.push(c);
        }
        out
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        // Denominator constant terms are 1, so reduction cannot fail.
        RationalFunction::reduce(num, &self.den * &rhs.den).unwrap()
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::reduce(num, &self.den * &rhs.den).unwrap()
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::reduce(UniPoly::from_i64(num), UniPoly::from_i64(den)).unwrap()
    }

    #[test]
    fn difference_of_squares_cancels() {
        // (1 - 4t^2)/(1 - 2t) = 1 + 2t
        let f = rf(&[1, 0, -4], &[1, -2]);
        assert_eq!(f, rf(&[1, 2], &[1]));
        assert!(f.denominator().is_one());
    }

    #[test]
    fn already_reduced_is_unchanged() {
        let f = rf(&[1, 1], &[1, -2]);
        assert_eq!(f.numerator(), &UniPoly::from_i64(&[1, 1]));
        assert_eq!(f.denominator(), &UniPoly::from_i64(&[1, -2]));
    }

    #[test]
    fn common_scalar_factor_is_removed() {
        // (2 + 2t)/(2 - 4t) = (1 + t)/(1 - 2t)
        assert_eq!(rf(&[2, 2], &[2, -4]), rf(&[1, 1], &[1, -2]));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        let r = RationalFunction::reduce(UniPoly::one(), UniPoly::zero());
        assert_eq!(r.unwrap_err(), ExactError::DivisionByZero);
    }

    #[test]
    fn zero_constant_term_is_an_error() {
        let r = RationalFunction::reduce(UniPoly::one(), UniPoly::from_i64(&[0, 1]));
        assert_eq!(r.unwrap_err(), ExactError::ZeroConstantTerm);
    }

    #[test]
    fn reduction_is_idempotent_and_cross_eq_agrees() {
        let f = rf(&[3, 3], &[3, -6]);
        let again = RationalFunction::reduce(f.numerator().clone(), f.denominator().clone()).unwrap();
        assert_eq!(f, again);
        assert!(f.cross_eq(&rf(&[1, 1], &[1, -2])));
        assert!(!f.cross_eq(&rf(&[1], &[1, -2])));
    }

    #[test]
    fn geometric_series_coefficients() {
        let f = rf(&[1], &[1, -2]);
        let coeffs = f.series_coefficients(5);
        let expect: Vec<_> = [1i64, 2, 4, 8, 16, 32].iter().map(|&c| crate::exactnum::rat(c)).collect();
        assert_eq!(coeffs, expect);
    }

    #[test]
    fn series_of_ratio() {
        // (1+t)/(1-2t) expands to 1, 3, 6, 12, ...
        let f = rf(&[1, 1], &[1, -2]);
        let coeffs = f.series_coefficients(4);
        let expect = vec![
            crate::exactnum::rat(1),
            crate::exactnum::rat(3),
            crate::exactnum::rat(6),
            crate::exactnum::rat(12),
            crate::exactnum::rat(24),
        ];
        assert_eq!(coeffs, expect);
    }
}
