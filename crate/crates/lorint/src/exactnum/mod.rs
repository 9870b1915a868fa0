//! Exact arithmetic for the value domain of the integral family: numbers of
//! the form `r + q*pi` with `r`, `q` arbitrary-precision rationals.
//!
//! Every integral handled by this crate lands in this domain, so the type
//! deliberately has no general multiplication: a product of two such values
//! would drag in pi^2 and leave the domain. Scaling by a rational is the
//! only multiplicative operation.

mod rational;

pub use rational::{factorial, Rational};

use num_bigint::BigInt;
use serde_json::{json, Value};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExactNumError {
    #[error("value {value} exceeds the double-precision range")]
    FloatOverflow { value: String },
    #[error("malformed exact-value JSON: {detail}")]
    JsonShape { detail: String },
}

/// An exact value `rat + pi_coeff * pi`.
///
/// Equality is componentwise equality of the canonical rational parts.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PiRational {
    rat: Rational,
    pi: Rational,
}

impl PiRational {
    pub fn new(rat: Rational, pi: Rational) -> Self {
        Self { rat, pi }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    pub fn from_rational(rat: Rational) -> Self {
        Self::new(rat, Rational::zero())
    }

    /// The pure multiple `q * pi`.
    pub fn pi_times(q: Rational) -> Self {
        Self::new(Rational::zero(), q)
    }

    pub fn rat_part(&self) -> &Rational {
        &self.rat
    }

    pub fn pi_part(&self) -> &Rational {
        &self.pi
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.pi.is_zero()
    }

    pub fn scale(&self, by: &Rational) -> Self {
        Self::new(&self.rat * by, &self.pi * by)
    }

    /// Nearest double. Componentwise conversion, then one fused combination
    /// `r + q*pi`; within 4 ulp whenever the two components do not cancel
    /// (and in this integral family one of them is always zero).
    pub fn to_f64(&self) -> Result<f64, ExactNumError> {
        Ok(self.rat.to_f64()? + self.pi.to_f64()? * std::f64::consts::PI)
    }

    /// JSON form `{"rat":[num,den],"pi":[num,den]}` with the integers as
    /// decimal strings, immune to 64-bit JSON-number truncation.
    pub fn to_json(&self) -> Value {
        fn pair(r: &Rational) -> Value {
            json!([r.numerator().to_string(), r.denominator().to_string()])
        }
        json!({ "rat": pair(&self.rat), "pi": pair(&self.pi) })
    }

    pub fn to_json_string(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(value: &Value) -> Result<Self, ExactNumError> {
        let field = |name: &str| -> Result<Rational, ExactNumError> {
            let pair = value
                .get(name)
                .and_then(Value::as_array)
                .filter(|a| a.len() == 2)
                .ok_or_else(|| ExactNumError::JsonShape {
                    detail: format!("expected \"{name}\" to be a [num, den] array"),
                })?;
            let int = |v: &Value| -> Result<BigInt, ExactNumError> {
                let s = v.as_str().ok_or_else(|| ExactNumError::JsonShape {
                    detail: format!("expected decimal string in \"{name}\""),
                })?;
                BigInt::from_str(s).map_err(|e| ExactNumError::JsonShape {
                    detail: format!("bad integer {s:?} in \"{name}\": {e}"),
                })
            };
            let num = int(&pair[0])?;
            let den = int(&pair[1])?;
            if den == BigInt::from(0) {
                return Err(ExactNumError::JsonShape {
                    detail: format!("zero denominator in \"{name}\""),
                });
            }
            Ok(Rational::new(num, den))
        };
        Ok(Self::new(field("rat")?, field("pi")?))
    }

    pub fn from_json_str(s: &str) -> Result<Self, ExactNumError> {
        let value: Value = serde_json::from_str(s).map_err(|e| ExactNumError::JsonShape {
            detail: e.to_string(),
        })?;
        Self::from_json(&value)
    }
}

impl Add for PiRational {
    type Output = PiRational;
    fn add(self, rhs: PiRational) -> PiRational {
        &self + &rhs
    }
}

impl Add for &PiRational {
    type Output = PiRational;
    fn add(self, rhs: &PiRational) -> PiRational {
        PiRational::new(&self.rat + &rhs.rat, &self.pi + &rhs.pi)
    }
}

impl Add<&Rational> for &PiRational {
    type Output = PiRational;
    fn add(self, rhs: &Rational) -> PiRational {
        PiRational::new(&self.rat + rhs, self.pi.clone())
    }
}

impl Sub for PiRational {
    type Output = PiRational;
    fn sub(self, rhs: PiRational) -> PiRational {
        &self - &rhs
    }
}

impl Sub for &PiRational {
    type Output = PiRational;
    fn sub(self, rhs: &PiRational) -> PiRational {
        PiRational::new(&self.rat - &rhs.rat, &self.pi - &rhs.pi)
    }
}

impl Sub<&Rational> for &PiRational {
    type Output = PiRational;
    fn sub(self, rhs: &Rational) -> PiRational {
        PiRational::new(&self.rat - rhs, self.pi.clone())
    }
}

impl Neg for PiRational {
    type Output = PiRational;
    fn neg(self) -> PiRational {
        PiRational::new(-self.rat, -self.pi)
    }
}

impl Neg for &PiRational {
    type Output = PiRational;
    fn neg(self) -> PiRational {
        PiRational::new(-&self.rat, -&self.pi)
    }
}

/// Renders the pi term of a positive coefficient: `pi`, or `3/8*pi`.
fn pi_term(q: &Rational) -> String {
    if q == &Rational::one() {
        "pi".to_string()
    } else {
        format!("{q}*pi")
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat.is_zero(), self.pi.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", self.rat),
            (true, false) => {
                if self.pi.is_negative() {
                    write!(f, "-{}", pi_term(&-&self.pi))
                } else {
                    write!(f, "{}", pi_term(&self.pi))
                }
            }
            (false, false) => {
                if self.pi.is_negative() {
                    write!(f, "{} - {}", self.rat, pi_term(&-&self.pi))
                } else {
                    write!(f, "{} + {}", self.rat, pi_term(&self.pi))
                }
            }
        }
    }
}

impl fmt::Debug for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(rn: i64, rd: i64, pn: i64, pd: i64) -> PiRational {
        PiRational::new(Rational::new(rn, rd), Rational::new(pn, pd))
    }

    #[test]
    fn componentwise_addition() {
        let a = pr(1, 2, 0, 1);
        let b = pr(0, 1, 1, 4);
        assert_eq!(&a + &b, pr(1, 2, 1, 4));
    }

    #[test]
    fn rational_scaling_and_negation() {
        let v = pr(0, 1, 1, 8);
        assert_eq!(v.scale(&Rational::from_integer(-1)), pr(0, 1, -1, 8));
    }

    #[test]
    fn additive_inverse_gives_canonical_zero() {
        let sum = pr(-2, 1, 0, 1) + pr(2, 1, 0, 1);
        assert!(sum.is_zero());
        assert_eq!(sum, PiRational::zero());
    }

    #[test]
    fn float_conversion() {
        assert_eq!(
            pr(0, 1, 1, 4).to_f64().unwrap(),
            std::f64::consts::FRAC_PI_4
        );
        assert_eq!(pr(-1, 2, 0, 1).to_f64().unwrap(), -0.5);
        assert_eq!(pr(0, 1, 3, 8).to_f64().unwrap(), 1.1780972450961724);
    }

    #[test]
    fn text_rendering() {
        assert_eq!(pr(0, 1, 1, 4).to_string(), "1/4*pi");
        assert_eq!(pr(-2, 1, 0, 1).to_string(), "-2");
        assert_eq!(pr(-1, 2, 1, 8).to_string(), "-1/2 + 1/8*pi");
        assert_eq!(pr(-1, 2, -1, 8).to_string(), "-1/2 - 1/8*pi");
        assert_eq!(pr(0, 1, 0, 1).to_string(), "0");
        assert_eq!(pr(0, 1, 1, 1).to_string(), "pi");
        assert_eq!(pr(0, 1, -1, 1).to_string(), "-pi");
    }

    #[test]
    fn json_round_trip() {
        let v = pr(-1, 2, 1, 8);
        let s = v.to_json_string();
        assert_eq!(s, r#"{"pi":["1","8"],"rat":["-1","2"]}"#);
        let back = PiRational::from_json_str(&s).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn json_rejects_malformed_input() {
        assert!(PiRational::from_json_str(r#"{"rat":["1"]}"#).is_err());
        assert!(PiRational::from_json_str(r#"{"rat":["1","2"],"pi":["x","2"]}"#).is_err());
        assert!(PiRational::from_json_str(r#"{"rat":["1","0"],"pi":["0","1"]}"#).is_err());
        assert!(PiRational::from_json_str("not json").is_err());
    }
}
