//! Dense univariate polynomials with big-integer coefficients.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;

use crate::exactnum::Rational;

/// Coefficients in ascending powers of x, trailing zeros trimmed.
/// The zero polynomial is the empty list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs([1])
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)))
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c))
    }

    pub fn scale(&self, by: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * by))
    }

    /// Multiplication by x^k (coefficient shift).
    pub fn mul_x_pow(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k)),
        )
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Rational::from_integer(c.clone());
        }
        acc
    }

    /// Horner evaluation in doubles; coefficients are rounded to the
    /// nearest double first.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().expect("coefficient within double range");
        }
        acc
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers: `-24*x^3 + 24*x`, `6*x^2 - 2`, `1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let with_coeff = !mag.is_one() || k == 0;
            if with_coeff {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "{}x", if with_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{k}", if with_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

use num_traits::One;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPoly::from_coeffs([1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(p, IntPoly::from_coeffs([1, 2]));

        let z = IntPoly::from_coeffs([0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn arithmetic() {
        let p = IntPoly::from_coeffs([1, 2]); // 1 + 2x
        let q = IntPoly::from_coeffs([-1, -2]);
        assert!(p.add(&q).is_zero());
        assert_eq!(p.mul(&q), IntPoly::from_coeffs([-1, -4, -4]));
        assert_eq!(p.mul_x_pow(2), IntPoly::from_coeffs([0, 0, 1, 2]));
        assert_eq!(p.scale(&BigInt::from(3)), IntPoly::from_coeffs([3, 6]));
    }

    #[test]
    fn derivative_rule() {
        // d/dx (2 - 3x + x^3) = -3 + 3x^2
        let p = IntPoly::from_coeffs([2, -3, 0, 1]);
        assert_eq!(p.derivative(), IntPoly::from_coeffs([-3, 0, 3]));
        assert!(IntPoly::one().derivative().is_zero());
    }

    #[test]
    fn exact_evaluation() {
        let p = IntPoly::from_coeffs([-2, 0, 6]); // 6x^2 - 2
        let x = Rational::new(1, 2);
        assert_eq!(p.eval_rational(&x), Rational::new(-1, 2));
        assert_eq!(p.eval_f64(0.5), -0.5);
    }

    #[test]
    fn display_descending_powers() {
        assert_eq!(
            IntPoly::from_coeffs([0, 24, 0, -24]).to_string(),
            "-24*x^3 + 24*x"
        );
        assert_eq!(IntPoly::from_coeffs([-2, 0, 6]).to_string(), "6*x^2 - 2");
        assert_eq!(IntPoly::one().to_string(), "1");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_coeffs([0, -1, 1]).to_string(), "x^2 - x");
    }
}
