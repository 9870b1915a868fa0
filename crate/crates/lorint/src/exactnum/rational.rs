//! Arbitrary-precision signed rationals in canonical form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::ExactNumError;

/// A rational number `num/den` with arbitrary-precision components.
///
/// Canonical form is enforced by every constructor and every arithmetic
/// operation: the denominator is strictly positive, numerator and
/// denominator are coprime, and zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds `num/den` and reduces to canonical form.
    ///
    /// Panics if `den` is zero.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Self::from_parts(num.into(), den.into())
    }

    fn from_parts(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        if num.is_zero() {
            return Self {
                num: BigInt::zero(),
                den: BigInt::one(),
            };
        }
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Self { num, den }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn abs(&self) -> Self {
        Self {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    /// Exact reciprocal. Panics on zero.
    pub fn recip(&self) -> Self {
        Self::from_parts(self.den.clone(), self.num.clone())
    }

    /// Converts to the nearest double, using balanced power-of-two scaling
    /// so that huge numerators and denominators of comparable size never
    /// overflow on the way through. The result is within 4 ulp of the
    /// exact value.
    ///
    /// Values beyond the double range yield [`ExactNumError::FloatOverflow`];
    /// values below the subnormal range flush to zero.
    pub fn to_f64(&self) -> Result<f64, ExactNumError> {
        if self.num.is_zero() {
            return Ok(0.0);
        }
        let exponent = self.num.bits() as i64 - self.den.bits() as i64;
        if exponent > 1030 {
            return Err(ExactNumError::FloatOverflow {
                value: self.to_string(),
            });
        }
        if exponent < -1080 {
            return Ok(0.0);
        }
        // Scale so the integer quotient carries ~63 significant bits.
        let shift = 63 - exponent;
        let scaled = if shift >= 0 {
            &self.num << shift as u64
        } else {
            &self.num >> (-shift) as u64
        };
        let q = (scaled / &self.den)
            .to_f64()
            .expect("63-bit quotient fits in f64");
        // Undo the scaling in at most two exact power-of-two steps.
        let s1 = shift.clamp(-1000, 1000);
        let s2 = shift - s1;
        let value = q * 2f64.powi(-s1 as i32) * 2f64.powi(-s2 as i32);
        if value.is_infinite() {
            return Err(ExactNumError::FloatOverflow {
                value: self.to_string(),
            });
        }
        Ok(value)
    }
}

/// n! as a big integer.
pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        &self + &rhs
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational::from_parts(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        &self - &rhs
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational::from_parts(
            &self.num * &rhs.den - &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        &self * &rhs
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational::from_parts(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division of rational by zero");
        Rational::from_parts(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational {
            num: -self.num.clone(),
            den: self.den.clone(),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // Denominators are positive, so cross-multiplication preserves order.
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}
