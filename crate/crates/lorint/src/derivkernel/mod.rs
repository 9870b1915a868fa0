//! Exact derivatives of the Lorentzian kernel f(x) = 1/(1+x^2).
//!
//! The n-th derivative always has the shape P_n(x)/(1+x^2)^(n+1) with P_n an
//! integer polynomial of degree exactly n, built from P_0 = 1 by
//!
//! ```text
//! P_{n+1} = (1+x^2) * P_n' - 2(n+1) * x * P_n.
//! ```
//!
//! Differentiating the defining ODE (1+x^2)f'' + 4xf' + 2f = 0 n times gives
//! the second-order recurrence checked by [`ode_residual`], and the boundary
//! values f_n(0) = n! cos(n pi/2) checked by [`value_at_zero`]. Both are
//! exact polynomial identities here, not numerical statements.

mod poly;

pub use poly::IntPoly;

use num_bigint::BigInt;
use std::sync::{Arc, LazyLock, RwLock};
use thiserror::Error;

use crate::exactnum::{factorial, Rational};

/// Largest derivative order the double-precision path accepts by default.
/// Coefficients near 31! still convert to doubles faithfully, but cancellation
/// in the alternating numerators grows with the order.
pub const DEFAULT_FLOAT_SAFETY_BOUND: u32 = 30;

#[derive(Debug, Error)]
pub enum DerivKernelError {
    #[error("derivative order {order} exceeds the float-safety bound {bound}")]
    OrderTooLarge { order: u32, bound: u32 },
}

/// The exact n-th derivative of 1/(1+x^2), stored as its numerator
/// polynomial; the denominator (1+x^2)^(order+1) is implicit.
#[derive(Clone, PartialEq, Eq)]
pub struct DerivRep {
    order: u32,
    numerator: IntPoly,
}

impl DerivRep {
    pub fn order(&self) -> u32 {
        self.order
    }

    /// P_n, with deg P_n = n.
    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    /// Exponent of the implicit denominator (1+x^2)^(n+1).
    pub fn denominator_exponent(&self) -> u32 {
        self.order + 1
    }

    /// Exact value of f_n at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let num = self.numerator.eval_rational(x);
        let den_base = &Rational::one() + &(x * x);
        let mut den = Rational::one();
        for _ in 0..self.denominator_exponent() {
            den = &den * &den_base;
        }
        &num / &den
    }
}

static MEMO: LazyLock<RwLock<Vec<Arc<DerivRep>>>> = LazyLock::new(|| RwLock::new(Vec::new()));

/// The representation (n, P_n) of the n-th derivative of 1/(1+x^2).
///
/// Computed once per order through the insert-once memo table; repeated
/// calls hand back the shared representation.
pub fn derivative_rep(n: u32) -> Arc<DerivRep> {
    {
        let memo = MEMO.read().expect("derivative memo poisoned");
        if let Some(rep) = memo.get(n as usize) {
            return Arc::clone(rep);
        }
    }
    let mut memo = MEMO.write().expect("derivative memo poisoned");
    while memo.len() <= n as usize {
        let next = match memo.last() {
            None => DerivRep {
                order: 0,
                numerator: IntPoly::one(),
            },
            Some(prev) => {
                let k = prev.order;
                let p = &prev.numerator;
                // P_{k+1} = (1+x^2) P_k' - 2(k+1) x P_k
                let dp = p.derivative();
                let lifted = dp.add(&dp.mul_x_pow(2));
                let numerator =
                    lifted.sub(&p.mul_x_pow(1).scale(&BigInt::from(2 * (k as u64 + 1))));
                DerivRep {
                    order: k + 1,
                    numerator,
                }
            }
        };
        memo.push(Arc::new(next));
    }
    Arc::clone(&memo[n as usize])
}

/// f_n(0) = n! cos(n pi/2), evaluated exactly: zero at odd orders,
/// (-1)^(n/2) n! at even orders. Independent of the polynomial recurrence,
/// which must reproduce it as P_n(0).
pub fn value_at_zero(n: u32) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    let mut value = factorial(n);
    if (n / 2) % 2 == 1 {
        value = -value;
    }
    Rational::from_integer(value)
}

/// The numerator of (1+x^2) f_{n+2} + 2(n+2) x f_{n+1} + (n+2)(n+1) f_n
/// after clearing the common denominator (1+x^2)^(n+3):
///
/// ```text
/// P_{n+2} + 2(n+2) x P_{n+1} + (n+2)(n+1)(1+x^2) P_n.
/// ```
///
/// The differentiated ODE says this is the zero polynomial for every n.
pub fn ode_residual(n: u32) -> IntPoly {
    let p_n = derivative_rep(n);
    let p_n1 = derivative_rep(n + 1);
    let p_n2 = derivative_rep(n + 2);
    let n = n as u64;

    let middle = p_n1
        .numerator()
        .mul_x_pow(1)
        .scale(&BigInt::from(2 * (n + 2)));
    let one_plus_x2 = IntPoly::from_coeffs([1, 0, 1]);
    let last = p_n
        .numerator()
        .mul(&one_plus_x2)
        .scale(&BigInt::from((n + 2) * (n + 1)));
    p_n2.numerator().add(&middle).add(&last)
}

/// f_n(x) in double precision: Horner on P_n divided by (1+x^2)^(n+1).
pub fn eval_f(n: u32, x: f64) -> Result<f64, DerivKernelError> {
    eval_f_with_bound(n, x, DEFAULT_FLOAT_SAFETY_BOUND)
}

pub fn eval_f_with_bound(n: u32, x: f64, bound: u32) -> Result<f64, DerivKernelError> {
    if n > bound {
        return Err(DerivKernelError::OrderTooLarge { order: n, bound });
    }
    let rep = derivative_rep(n);
    let num = rep.numerator().eval_f64(x);
    let den = (1.0 + x * x).powi(rep.denominator_exponent() as i32);
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_numerators_match_hand_differentiation() {
        assert_eq!(derivative_rep(0).numerator(), &IntPoly::one());
        assert_eq!(
            derivative_rep(1).numerator(),
            &IntPoly::from_coeffs([0, -2])
        );
        assert_eq!(
            derivative_rep(2).numerator(),
            &IntPoly::from_coeffs([-2, 0, 6])
        );
        assert_eq!(
            derivative_rep(3).numerator(),
            &IntPoly::from_coeffs([0, 24, 0, -24])
        );
    }

    #[test]
    fn degree_and_denominator_exponent() {
        for n in 0..20u32 {
            let rep = derivative_rep(n);
            assert_eq!(rep.numerator().degree(), Some(n as usize));
            assert_eq!(rep.denominator_exponent(), n + 1);
        }
    }

    #[test]
    fn boundary_values() {
        assert_eq!(value_at_zero(0), Rational::one());
        assert_eq!(value_at_zero(3), Rational::zero());
        assert_eq!(value_at_zero(4), Rational::from_integer(24));
        // and the recurrence agrees at the origin
        for n in 0..12u32 {
            assert_eq!(
                Rational::from_integer(derivative_rep(n).numerator().coeff(0)),
                value_at_zero(n),
                "P_{n}(0)"
            );
        }
    }

    #[test]
    fn ode_residual_vanishes() {
        for n in [0u32, 1, 10] {
            assert!(ode_residual(n).is_zero(), "residual at n={n}");
        }
    }

    #[test]
    fn float_evaluation() {
        assert_eq!(eval_f(0, 1.0).unwrap(), 0.5);
        assert_eq!(eval_f(1, 1.0).unwrap(), -0.5);
        assert_eq!(eval_f(2, 0.0).unwrap(), -2.0);
    }

    #[test]
    fn float_safety_bound() {
        assert!(eval_f(DEFAULT_FLOAT_SAFETY_BOUND, 0.5).is_ok());
        assert!(matches!(
            eval_f(DEFAULT_FLOAT_SAFETY_BOUND + 1, 0.5),
            Err(DerivKernelError::OrderTooLarge { .. })
        ));
        assert!(eval_f_with_bound(DEFAULT_FLOAT_SAFETY_BOUND + 1, 0.5, 40).is_ok());
    }

    #[test]
    fn exact_point_evaluation() {
        // f_1(1) = -2/4 = -1/2
        let rep = derivative_rep(1);
        assert_eq!(rep.eval_rational(&Rational::one()), Rational::new(-1, 2));
    }

    #[test]
    fn memo_is_safe_under_concurrent_access() {
        let handles: Vec<_> = (0..8)
            .map(|i| {
                std::thread::spawn(move || {
                    let rep = derivative_rep(25 + (i % 3));
                    rep.numerator().coeff(0)
                })
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        // idempotent: a second request sees the same shared value
        assert!(Arc::ptr_eq(&derivative_rep(25), &derivative_rep(25)));
    }
}
