//! The field obtained from the rationals by adjoining a primitive cube root
//! of unity.
//!
//! Elements are written `a + b·w` where `w` satisfies `w^2 = -1 - w` (so
//! `w^3 = 1`). The pair `(a, b)` is a basis representation, which makes
//! equality, inversion, and the norm form `a^2 - ab + b^2` exact.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{rat, ExactError, Rational};

/// An element `a + b·w` of the degree-two extension of the rationals by a
/// primitive cube root of unity `w`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct EisensteinScalar {
    re: Rational,
    om: Rational,
}

impl EisensteinScalar {
    pub fn new(re: Rational, om: Rational) -> Self {
        EisensteinScalar { re, om }
    }

    /// The rational `a` viewed as a scalar.
    pub fn from_rational(re: Rational) -> Self {
        EisensteinScalar { re, om: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The primitive cube root of unity `w` itself.
    pub fn omega() -> Self {
        EisensteinScalar { re: Rational::zero(), om: Rational::one() }
    }

    /// `w^k` for any exponent, reduced via `w^3 = 1`.
    pub fn omega_pow(k: u32) -> Self {
        match k % 3 {
            0 => Self::one(),
            1 => Self::omega(),
            _ => EisensteinScalar { re: rat(-1), om: rat(-1) },
        }
    }

    /// Coefficient of `1` in the `(1, w)` basis.
    pub fn rational_part(&self) -> &Rational {
        &self.re
    }

    /// Coefficient of `w` in the `(1, w)` basis.
    pub fn omega_part(&self) -> &Rational {
        &self.om
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.om.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.om.is_zero()
    }

    /// True when the scalar is a plain rational (no `w` component).
    pub fn is_rational(&self) -> bool {
        self.om.is_zero()
    }

    /// Multiplies both basis coordinates by a rational.
    pub fn scale_rational(&self, r: &Rational) -> Self {
        EisensteinScalar { re: &self.re * r, om: &self.om * r }
    }

    /// Galois conjugate: sends `w` to `w^2 = -1 - w`.
    pub fn conjugate(&self) -> Self {
        EisensteinScalar {
            re: &self.re - &self.om,
            om: -self.om.clone(),
        }
    }

    /// Field norm `a^2 - ab + b^2`; zero exactly when the element is zero.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.re * &self.om + &self.om * &self.om
    }

    /// Multiplicative inverse: the conjugate divided by the norm.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(EisensteinScalar { re: c.re / &n, om: c.om / &n })
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn cube(&self) -> Self {
        self.pow(3)
    }
}

impl Add for &EisensteinScalar {
    type Output = EisensteinScalar;
    fn add(self, rhs: &EisensteinScalar) -> EisensteinScalar {
        EisensteinScalar { re: &self.re + &rhs.re, om: &self.om + &rhs.om }
    }
}

impl Sub for &EisensteinScalar {
    type Output = EisensteinScalar;
    fn sub(self, rhs: &EisensteinScalar) -> EisensteinScalar {
        EisensteinScalar { re: &self.re - &rhs.re, om: &self.om - &rhs.om }
    }
}

impl Mul for &EisensteinScalar {
    type Output = EisensteinScalar;
    fn mul(self, rhs: &EisensteinScalar) -> EisensteinScalar {
        // (a + bw)(c + dw) = ac + (ad + bc) w + bd w^2, and w^2 = -1 - w.
        let ac = &self.re * &rhs.re;
        let bd = &self.om * &rhs.om;
        let cross = &self.re * &rhs.om + &self.om * &rhs.re;
        EisensteinScalar { re: ac - &bd, om: cross - &bd }
    }
}

impl Neg for &EisensteinScalar {
    type Output = EisensteinScalar;
    fn neg(self) -> EisensteinScalar {
        EisensteinScalar { re: -self.re.clone(), om: -self.om.clone() }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for EisensteinScalar {
            type Output = EisensteinScalar;
            fn $method(self, rhs: EisensteinScalar) -> EisensteinScalar {
                $trait::$method(&self, &rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for EisensteinScalar {
    type Output = EisensteinScalar;
    fn neg(self) -> EisensteinScalar {
        -&self
    }
}

/// Formats in the same literal grammar the presentation parser accepts:
/// `3`, `-1/2`, `w`, `2*w`, or a parenthesized sum such as `(1 - 2*w)`.
impl fmt::Display for EisensteinScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn omega_term(om: &Rational) -> alloc::string::String {
            use alloc::format;
            use alloc::string::String;
            if om.is_one() {
                String::from("w")
            } else if (-om).is_one() {
                String::from("-w")
            } else {
                format!("{}*w", om)
            }
        }
        if self.om.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}", omega_term(&self.om));
        }
        if self.om.is_positive() {
            write!(f, "({} + {})", self.re, omega_term(&self.om))
        } else {
            write!(f, "({} - {})", self.re, omega_term(&-self.om.clone()))
        }
    }
}

impl fmt::Debug for EisensteinScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
