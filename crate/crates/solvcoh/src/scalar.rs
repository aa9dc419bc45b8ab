//! Exact Gaussian-rational scalars `a + b i` with `a, b ∈ ℚ`.
//!
//! Every coefficient in the engine lives here. Denominators are kept
//! positive and reduced by `num-rational`, so equality is structural and
//! all field operations are exact. There is no floating-point path.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A rational number with arbitrary-precision numerator and denominator.
pub type Rational = BigRational;

/// Build a reduced rational from an integer pair. Panics on zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An exact Gaussian rational, the coefficient field of the whole engine.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Complex<Rational>);

impl Scalar {
    pub fn new(re: Rational, im: Rational) -> Self {
        Scalar(Complex::new(re, im))
    }

    pub fn zero() -> Self {
        Scalar(Complex::new(Rational::zero(), Rational::zero()))
    }

    pub fn one() -> Self {
        Scalar(Complex::new(Rational::one(), Rational::zero()))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar(Complex::new(Rational::zero(), Rational::one()))
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(Rational::from(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Scalar::from_rational(ratio(num, den))
    }

    pub fn from_rational(re: Rational) -> Self {
        Scalar(Complex::new(re, Rational::zero()))
    }

    pub fn re(&self) -> &Rational {
        &self.0.re
    }

    pub fn im(&self) -> &Rational {
        &self.0.im
    }

    pub fn is_zero(&self) -> bool {
        self.0.re.is_zero() && self.0.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.re.is_one() && self.0.im.is_zero()
    }

    /// True when the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.0.im.is_zero()
    }

    /// Complex conjugate `a - b i`.
    pub fn conj(&self) -> Self {
        Scalar(Complex::new(self.0.re.clone(), -self.0.im.clone()))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let norm = &self.0.re * &self.0.re + &self.0.im * &self.0.im;
        Scalar(Complex::new(&self.0.re / &norm, -&self.0.im / &norm))
    }

    /// `|z|² = a² + b²` as an exact rational.
    pub fn norm_sq(&self) -> Rational {
        &self.0.re * &self.0.re + &self.0.im * &self.0.im
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar(self.0 + rhs.0.clone())
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0.re += &rhs.0.re;
        self.0.im += &rhs.0.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 - rhs.0)
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0.re -= &rhs.0.re;
        self.0.im -= &rhs.0.im;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 * rhs.0)
    }
}

impl<'a, 'b> Mul<&'b Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar(self.0.clone() * rhs.0.clone())
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 = self.0.clone() * rhs.0.clone();
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self * rhs.inv()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0.clone())
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if !self.0.re.is_zero() {
            fmt_rational(&self.0.re, f)?;
            if self.0.im.is_positive() {
                write!(f, "+")?;
            }
        }
        if !self.0.im.is_zero() {
            if self.0.im == -Rational::one() {
                write!(f, "-")?;
            } else if !self.0.im.is_one() {
                fmt_rational(&self.0.im, f)?;
            }
            write!(f, "i")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops_are_exact() {
        let a = Scalar::from_ratio(1, 3) + Scalar::from_ratio(1, 6);
        assert_eq!(a, Scalar::from_ratio(1, 2));
        let b = Scalar::new(ratio(1, 2), ratio(-3, 4));
        let prod = b.clone() * b.inv();
        assert!(prod.is_one());
    }

    #[test]
    fn i_squares_to_minus_one() {
        assert_eq!(Scalar::i() * Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn conjugation_is_involutive_and_multiplicative() {
        let a = Scalar::new(ratio(2, 5), ratio(7, 3));
        let b = Scalar::new(ratio(-1, 2), ratio(1, 9));
        assert_eq!(a.conj().conj(), a);
        assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::from_ratio(-3, 4).to_string(), "-3/4");
        assert_eq!(Scalar::new(ratio(1, 2), ratio(1, 1)).to_string(), "1/2+i");
        assert_eq!(Scalar::new(ratio(0, 1), ratio(-1, 2)).to_string(), "-1/2i");
    }
}
