//! Node-doubling composite quadrature over finite intervals.
//!
//! One fixed high-order panel rule (8-point Gauss-Legendre) applied on a
//! uniform grid, doubling the panel count until two successive estimates
//! agree. The family's integrands arrive here already mapped through
//! x = tan(theta), so the domain is [0, pi/2] and the integrand is a
//! polynomial in sin and cos: smooth, bounded, and exactly zero at the
//! right endpoint.

use std::sync::LazyLock;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::derivkernel::{derivative_rep, DEFAULT_FLOAT_SAFETY_BOUND};

/// Smallest relative tolerance the double-precision engine accepts.
pub const MIN_REL_TOL: f64 = 1e-12;

/// Panel budget: refinement stops once the grid would exceed 2^22 panels.
pub const DEFAULT_MAX_DOUBLINGS: u32 = 22;

/// Scale floor in the relative convergence test.
pub const CONVERGENCE_FLOOR: f64 = 1e-30;

#[derive(Debug, Error)]
pub enum QuadratureError {
    #[error("derivative order {order} exceeds the float-safety bound {bound}")]
    OrderTooLarge { order: u32, bound: u32 },
    #[error("rel_tol {rel_tol:e} is below the supported minimum {min:e}")]
    ToleranceTooTight { rel_tol: f64, min: f64 },
    #[error("no convergence within the panel budget (last estimate {})", .result.value)]
    DidNotConverge { result: QuadratureResult },
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: u64,
    pub converged: bool,
}

/// 8-point Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration
/// on the Legendre recurrence.
static GL8: LazyLock<([f64; 8], [f64; 8])> = LazyLock::new(|| {
    const N: usize = 8;
    let mut nodes = [0.0; N];
    let mut weights = [0.0; N];
    for (i, (node, weight)) in nodes.iter_mut().zip(weights.iter_mut()).enumerate() {
        let mut x: f64 = (std::f64::consts::PI * (i as f64 + 0.75) / (N as f64 + 0.5)).cos();
        for _ in 0..64 {
            let (p, dp) = legendre_p_dp(N, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_p_dp(N, x);
        *node = x;
        *weight = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
});

fn legendre_p_dp(n: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=n {
        let k = k as f64;
        let p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
        p_prev = p;
        p = p_next;
    }
    let dp = n as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// One composite pass with `panels` uniform panels; returns the estimate
/// and the L1 mass of the rule application (the roundoff scale).
fn composite_pass<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, panels: u64) -> (f64, f64) {
    let (nodes, weights) = &*GL8;
    let h = (b - a) / panels as f64;
    let half = 0.5 * h;
    let mut sum = 0.0;
    let mut l1 = 0.0;
    for p in 0..panels {
        let mid = a + (p as f64 + 0.5) * h;
        for (x, w) in nodes.iter().zip(weights) {
            let term = w * half * f(mid + half * x);
            sum += term;
            l1 += term.abs();
        }
    }
    (sum, l1)
}

/// Node-doubling refinement until successive estimates agree within
/// `rel_tol * max(|estimate|, floor)`, or until the difference sinks to the
/// roundoff plateau of the rule application (which is how exact zeros
/// terminate: their estimates can never satisfy a purely relative test).
pub(crate) fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    rel_tol: f64,
    initial_panels: u64,
    max_doublings: u32,
) -> Result<QuadratureResult, QuadratureError> {
    let panel_cap: u64 = 1 << max_doublings;
    let mut panels = initial_panels.min(panel_cap);
    let mut evaluations = 0u64;
    let (mut prev, _) = composite_pass(f, a, b, panels);
    evaluations += 8 * panels;

    while panels < panel_cap {
        panels *= 2;
        let (cur, l1) = composite_pass(f, a, b, panels);
        evaluations += 8 * panels;
        let delta = (cur - prev).abs();
        let tol = rel_tol * cur.abs().max(CONVERGENCE_FLOOR);
        let plateau = 32.0 * f64::EPSILON * l1;
        if delta <= tol.max(plateau) {
            return Ok(QuadratureResult {
                value: cur,
                abs_error_estimate: delta.max(f64::EPSILON * l1),
                evaluations,
                converged: true,
            });
        }
        prev = cur;
    }
    Err(QuadratureError::DidNotConverge {
        result: QuadratureResult {
            value: prev,
            abs_error_estimate: f64::NAN,
            evaluations,
            converged: false,
        },
    })
}

/// Numerically evaluates I(m,n) through the substitution x = tan(theta):
///
/// ```text
/// I(m,n) = integral over [0, pi/2] of
///          P_m(tan t) * P_n(tan t) * cos(t)^(2(m+n)+2) dt
/// ```
///
/// The integrand is evaluated as a homogeneous polynomial in (sin t, cos t),
/// so the tan never materializes and the endpoint t = pi/2 is an ordinary
/// zero rather than a limit.
pub fn quadrature(m: u32, n: u32, rel_tol: f64) -> Result<QuadratureResult, QuadratureError> {
    for order in [m, n] {
        if order > DEFAULT_FLOAT_SAFETY_BOUND {
            return Err(QuadratureError::OrderTooLarge {
                order,
                bound: DEFAULT_FLOAT_SAFETY_BOUND,
            });
        }
    }
    if rel_tol < MIN_REL_TOL {
        return Err(QuadratureError::ToleranceTooTight {
            rel_tol,
            min: MIN_REL_TOL,
        });
    }

    let product = derivative_rep(m)
        .numerator()
        .mul(derivative_rep(n).numerator());
    let coeffs: Vec<f64> = product
        .coefficients()
        .iter()
        .map(|c| c.to_f64().expect("product coefficient within double range"))
        .collect();
    let degree = coeffs.len() - 1; // = m + n; the product never vanishes
    let cos_exponent = (2 * (m + n) + 2) as i32;

    let integrand = move |theta: f64| {
        let (s, co) = theta.sin_cos();
        // sum_k c_k sin^k cos^(d-k), Horner in sin with a running cos power
        let mut acc = coeffs[degree];
        let mut copow = 1.0;
        for k in (0..degree).rev() {
            copow *= co;
            acc = acc * s + coeffs[k] * copow;
        }
        acc * co.powi(cos_exponent - degree as i32)
    };

    refine(
        &integrand,
        0.0,
        std::f64::consts::FRAC_PI_2,
        rel_tol,
        16,
        DEFAULT_MAX_DOUBLINGS,
    )
}
