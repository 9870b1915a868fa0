//! Ground-truth evaluators for the integral family.
//!
//! Two independent routes:
//!
//! 1. [`integral_exact`] expands the product of numerator polynomials and
//!    integrates term by term against the exact moment table
//!    `M(k,s) = integral of x^k/(1+x^2)^s over [0, infinity)`. Everything is
//!    arbitrary-precision rational arithmetic; the result is exact and is
//!    the reference every closed form is judged against.
//! 2. [`quadrature`] evaluates the same integral in floating point after the
//!    tan substitution, with node-doubling refinement.
//!
//! [`cosine_transform_check`] numerically confirms the transform identity
//! used by the even-case derivation: the cosine transform of the Lorentzian
//! kernel is (pi/2) e^(-z).

mod quadrature;

pub use quadrature::{
    quadrature, QuadratureError, QuadratureResult, CONVERGENCE_FLOOR, DEFAULT_MAX_DOUBLINGS,
    MIN_REL_TOL,
};

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use thiserror::Error;

use crate::derivkernel::derivative_rep;
use crate::exactnum::{PiRational, Rational};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("moment M({k},{s}) diverges: integrability needs k <= 2s-2")]
    DivergentMoment { k: u32, s: u32 },
    #[error("transform check needs a finite z >= 0, got {z}")]
    InvalidFrequency { z: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// Index (k, s) of the moment `M(k,s) = integral of x^k/(1+x^2)^s`.
/// Convergence domain: k <= 2s-2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MomentKey {
    pub k: u32,
    pub s: u32,
}

static MOMENTS: LazyLock<RwLock<HashMap<MomentKey, PiRational>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// Exact moment `M(k,s)`, memoized.
///
/// Even k gives a pure pi multiple, odd k a pure rational, via
/// `M(k,s) = (k-1)/(2(s-1)) * M(k-2, s-1)` on top of the closed base cases
/// `M(0,s) = (pi/2) * prod_{i<s} (2i-1)/(2i)` and `M(1,s) = 1/(2(s-1))`.
pub fn moment(k: u32, s: u32) -> Result<PiRational, OracleError> {
    if s == 0 || k + 2 > 2 * s {
        return Err(OracleError::DivergentMoment { k, s });
    }
    let key = MomentKey { k, s };
    {
        let cache = MOMENTS.read().expect("moment cache poisoned");
        if let Some(v) = cache.get(&key) {
            return Ok(v.clone());
        }
    }
    let value = match k {
        0 => {
            let mut q = Rational::new(1, 2);
            for i in 1..s {
                q = &q * &Rational::new(2 * i as i64 - 1, 2 * i as i64);
            }
            PiRational::pi_times(q)
        }
        1 => PiRational::from_rational(Rational::new(1, 2 * (s as i64 - 1))),
        _ => {
            let prev = moment(k - 2, s - 1)?;
            prev.scale(&Rational::new(k as i64 - 1, 2 * (s as i64 - 1)))
        }
    };
    let mut cache = MOMENTS.write().expect("moment cache poisoned");
    Ok(cache.entry(key).or_insert(value).clone())
}

/// The exact value of I(m,n), the crate's ground truth.
///
/// Expands P_m * P_n and integrates each power against [`moment`] with
/// denominator exponent s = m+n+2. Every term converges: the product has
/// degree m+n, comfortably below 2s-2.
pub fn integral_exact(m: u32, n: u32) -> PiRational {
    let product = derivative_rep(m)
        .numerator()
        .mul(derivative_rep(n).numerator());
    let s = m + n + 2;
    let mut total = PiRational::zero();
    for (k, coeff) in product.coefficients().iter().enumerate() {
        if coeff == &BigInt::from(0) {
            continue;
        }
        let mk = moment(k as u32, s).expect("family moments always converge");
        total = &total + &mk.scale(&Rational::from_integer(coeff.clone()));
    }
    total
}

/// Result of checking the cosine-transform identity
/// `integral of cos(xz)/(1+x^2) over [0, infinity) = (pi/2) e^(-z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformCheck {
    pub z: f64,
    /// Numerically integrated left-hand side.
    pub value: f64,
    /// Closed-form right-hand side (pi/2) e^(-z).
    pub expected: f64,
    /// Quadrature error estimate plus the analytic tail bound.
    pub abs_error_estimate: f64,
    pub evaluations: u64,
    pub converged: bool,
    /// |value - expected| <= max(rel_tol, 1e-6) * expected.
    pub agrees: bool,
}

/// Relative agreement demanded of the transform check, whatever the
/// requested tolerance.
pub const TRANSFORM_AGREEMENT_REL: f64 = 1e-6;

/// Numerically verifies the cosine-transform identity at frequency z.
///
/// For z > 0 the integral is truncated at
/// `X = max(2000, 40/max(z, 0.1))` rounded up to a whole number of
/// half-periods pi/z. Ending on a half-period boundary kills the leading
/// sin term of the tail, leaving a rigorous tail bound of order 1/(z X)^2
/// per unit, well below the 1e-6 agreement threshold; the bound is added to
/// the reported error estimate. At z = 0 there is no oscillation to
/// truncate against, so the integral is taken through the tan substitution
/// instead, which makes the domain finite with no tail at all.
pub fn cosine_transform_check(z: f64, rel_tol: f64) -> Result<TransformCheck, OracleError> {
    if !z.is_finite() || z < 0.0 {
        return Err(OracleError::InvalidFrequency { z });
    }
    let expected = std::f64::consts::FRAC_PI_2 * (-z).exp();
    let rel_tol = rel_tol.max(MIN_REL_TOL);

    let (outcome, tail_bound) = if z == 0.0 {
        let outcome = quadrature::refine(
            &|theta: f64| (z * theta.tan()).cos(),
            0.0,
            std::f64::consts::FRAC_PI_2,
            rel_tol,
            16,
            DEFAULT_MAX_DOUBLINGS,
        );
        (outcome, 0.0)
    } else {
        let half_period = std::f64::consts::PI / z;
        let base = 2000f64.max(40.0 / z.max(0.1));
        let x_max = (base / half_period).ceil() * half_period;
        // Tail of integration by parts twice, with sin(Xz) = 0 by the
        // half-period alignment (up to rounding of X itself).
        let tail_bound = (x_max * z).sin().abs() / (z * (1.0 + x_max * x_max))
            + 2.0 * x_max / (z * z * (1.0 + x_max * x_max).powi(2))
            + 2.0 / (z * z * x_max.powi(3));
        let initial_panels = ((x_max / half_period).ceil() as u64)
            .next_power_of_two()
            .max(16);
        let outcome = quadrature::refine(
            &|x: f64| (x * z).cos() / (1.0 + x * x),
            0.0,
            x_max,
            rel_tol,
            initial_panels,
            DEFAULT_MAX_DOUBLINGS,
        );
        (outcome, tail_bound)
    };

    let (result, converged) = match outcome {
        Ok(r) => (r, true),
        Err(QuadratureError::DidNotConverge { result }) => (result, false),
        Err(e) => return Err(e.into()),
    };
    let value = result.value;
    let agrees = (value - expected).abs() <= rel_tol.max(TRANSFORM_AGREEMENT_REL) * expected;
    Ok(TransformCheck {
        z,
        value,
        expected,
        abs_error_estimate: if converged {
            result.abs_error_estimate + tail_bound
        } else {
            f64::NAN
        },
        evaluations: result.evaluations,
        converged,
        agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::factorial;
    use num_traits::One;

    fn pi_frac(n: i64, d: i64) -> PiRational {
        PiRational::pi_times(Rational::new(n, d))
    }

    fn rat(n: i64, d: i64) -> PiRational {
        PiRational::from_rational(Rational::new(n, d))
    }

    #[test]
    fn moment_base_cases() {
        assert_eq!(moment(0, 1).unwrap(), pi_frac(1, 2));
        assert_eq!(moment(1, 2).unwrap(), rat(1, 2));
    }

    #[test]
    fn moment_recurrence() {
        // M(2,4) = (1/6) M(0,3) = (1/6)(3 pi/16)
        assert_eq!(moment(2, 4).unwrap(), pi_frac(1, 32));
        assert_eq!(moment(0, 3).unwrap(), pi_frac(3, 16));
    }

    #[test]
    fn moment_divergence() {
        assert!(matches!(
            moment(1, 1),
            Err(OracleError::DivergentMoment { .. })
        ));
        assert!(matches!(
            moment(3, 2),
            Err(OracleError::DivergentMoment { .. })
        ));
        assert!(matches!(
            moment(0, 0),
            Err(OracleError::DivergentMoment { .. })
        ));
        // boundary of the domain converges
        assert!(moment(2, 2).is_ok());
    }

    #[test]
    fn spot_values() {
        assert_eq!(integral_exact(0, 0), pi_frac(1, 4));
        assert_eq!(integral_exact(1, 0), rat(-1, 2));
        assert_eq!(integral_exact(1, 1), pi_frac(1, 8));
        assert_eq!(integral_exact(3, 0), rat(2, 1));
        assert_eq!(integral_exact(3, 2), rat(-2, 1));
    }

    #[test]
    fn ground_truth_symmetry_and_parity() {
        for m in 0..=6u32 {
            for n in 0..=6u32 {
                let v = integral_exact(m, n);
                assert_eq!(v, integral_exact(n, m), "symmetry at ({m},{n})");
                if (m + n) % 2 == 0 {
                    assert!(v.rat_part().is_zero(), "even case at ({m},{n})");
                } else {
                    assert!(v.pi_part().is_zero(), "odd case at ({m},{n})");
                }
            }
        }
    }

    #[test]
    fn adjacent_identity() {
        use crate::derivkernel::value_at_zero;
        for n in 0..=12u32 {
            let boundary = value_at_zero(n);
            let expected = Rational::new(-1, 2) * (&boundary * &boundary);
            assert_eq!(
                integral_exact(n + 1, n),
                PiRational::from_rational(expected),
                "at n={n}"
            );
        }
    }

    #[test]
    fn even_magnitude_matches_factorial_form() {
        for s in (0..=10u32).step_by(2) {
            for n in 0..=s / 2 {
                let m = s - n;
                let v = integral_exact(m, n);
                assert_eq!(
                    v.pi_part().abs(),
                    Rational::new(factorial(s), BigInt::one() << (s + 2)),
                    "magnitude at ({m},{n})"
                );
            }
        }
    }

    #[test]
    fn transform_check_at_zero_frequency() {
        let r = cosine_transform_check(0.0, 1e-10).unwrap();
        assert!(r.converged && r.agrees);
        assert!((r.value - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    }

    #[test]
    fn transform_check_matches_closed_form() {
        for (z, expected) in [(1.0, 0.5778636748954609), (2.0, 0.21258416579381817)] {
            let r = cosine_transform_check(z, 1e-8).unwrap();
            assert!(r.converged, "z={z} did not converge");
            assert!(r.agrees, "z={z}: {} vs {}", r.value, r.expected);
            assert!((r.expected - expected).abs() < 1e-15);
            assert!((r.value - expected).abs() <= 1e-6 * expected);
        }
    }

    #[test]
    fn transform_check_rejects_negative_z() {
        assert!(matches!(
            cosine_transform_check(-1.0, 1e-8),
            Err(OracleError::InvalidFrequency { .. })
        ));
    }

    #[test]
    fn moment_cache_is_safe_under_concurrent_access() {
        let handles: Vec<_> = (0..8u32)
            .map(|_| std::thread::spawn(|| integral_exact(10, 8)))
            .collect();
        let sequential = integral_exact(10, 8);
        for h in handles {
            assert_eq!(h.join().unwrap(), sequential);
        }
    }
}
