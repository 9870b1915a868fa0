//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible under `cargo test --test acceptance -- --nocapture`).
//!
//! Exact statements carry zero tolerance; the floating-point cross-checks
//! pin their tolerances here, in code.

use num_bigint::BigInt;
use num_traits::One;

use lorint::cli::{EntryStatus, VerificationReport};
use lorint::closedform::{even_case_corrected, ibp_reduce};
use lorint::derivkernel::{derivative_rep, ode_residual, value_at_zero};
use lorint::exactnum::{factorial, PiRational, Rational};
use lorint::oracle::{cosine_transform_check, integral_exact, quadrature};

fn rat(num: i64, den: i64) -> PiRational {
    PiRational::from_rational(Rational::new(num, den))
}

fn pi_frac(num: i64, den: i64) -> PiRational {
    PiRational::pi_times(Rational::new(num, den))
}

#[test]
fn criterion_01_lower_adjacent_family() {
    for k in 0..=10u32 {
        let f = factorial(2 * k);
        let expected = PiRational::from_rational(Rational::new(-(&f * &f), 2));
        assert_eq!(
            integral_exact(2 * k + 1, 2 * k),
            expected,
            "I({},{})",
            2 * k + 1,
            2 * k
        );
    }
    println!("PASS: criterion 1: I(2k+1,2k) = -[(2k)!]^2/2 exactly for k = 0..10");
}

#[test]
fn criterion_02_upper_adjacent_family() {
    for k in 0..=10u32 {
        assert_eq!(
            integral_exact(2 * k + 2, 2 * k + 1),
            PiRational::zero(),
            "I({},{})",
            2 * k + 2,
            2 * k + 1
        );
    }
    println!("PASS: criterion 2: I(2k+2,2k+1) = 0 exactly for k = 0..10");
}

#[test]
fn criterion_03_odd_case_exact() {
    let mut pairs = 0;
    for s in (1..=25u32).step_by(2) {
        for m in 0..=s {
            let n = s - m;
            assert_eq!(
                lorint::closedform::odd_case(m, n).unwrap(),
                integral_exact(m, n),
                "odd case at ({m},{n})"
            );
            pairs += 1;
        }
    }
    println!(
        "PASS: criterion 3: odd-case closed form exact on all {pairs} pairs with m+n odd <= 25"
    );
}

#[test]
fn criterion_04_even_magnitude_and_classification() {
    for s in (0..=24u32).step_by(2) {
        for n in 0..=s / 2 {
            let m = s - n;
            let magnitude = Rational::new(factorial(s), BigInt::one() << (s + 2));
            assert_eq!(
                integral_exact(m, n).pi_part().abs(),
                magnitude,
                "|I({m},{n})|"
            );
        }
    }
    // classification over the same range: agree or sign_mismatch, never worse
    let report = VerificationReport::build(24, 1e-10);
    let mut agree = 0;
    let mut sign = 0;
    let mut flipped = Vec::new();
    for e in report.entries.iter().filter(|e| (e.m + e.n) % 2 == 0) {
        match e.status {
            EntryStatus::Agree => agree += 1,
            EntryStatus::SignMismatch => {
                sign += 1;
                flipped.push((e.m, e.n));
            }
            EntryStatus::ValueMismatch => panic!("value mismatch at ({},{})", e.m, e.n),
        }
    }
    println!(
        "PASS: criterion 4: even-case magnitude (m+n)!*pi/2^(m+n+2) exact for m+n <= 24; \
         printed sign agrees on {agree} pairs, flips on {sign} (first flips: {:?})",
        &flipped[..flipped.len().min(4)]
    );
}

#[test]
fn criterion_05_corrected_candidate_validated() {
    let mut failing = Vec::new();
    for s in (0..=24u32).step_by(2) {
        for n in 0..=s {
            let m = s - n;
            if even_case_corrected(m, n).unwrap() != integral_exact(m, n) {
                failing.push((m, n));
            }
        }
    }
    assert!(
        failing.is_empty(),
        "corrected even-case formula fails at {failing:?}"
    );
    println!("PASS: criterion 5: corrected even-case formula equals the oracle on every pair with m+n even <= 24");
}

#[test]
fn criterion_06_boundary_values() {
    for n in 0..=40u32 {
        let from_formula = value_at_zero(n);
        let from_recurrence = Rational::from_integer(derivative_rep(n).numerator().coeff(0));
        assert_eq!(from_formula, from_recurrence, "P_{n}(0)");
    }
    println!("PASS: criterion 6: P_n(0) = n! cos(n pi/2) exactly for n <= 40");
}

#[test]
fn criterion_07_ode_identity() {
    for n in 0..=40u32 {
        assert!(ode_residual(n).is_zero(), "nonzero residual at n={n}");
    }
    println!("PASS: criterion 7: differentiated-ODE residual is the zero polynomial for n <= 40");
}

#[test]
fn criterion_08_ibp_consistency() {
    let mut pairs = 0;
    for s in 0..=20u32 {
        for n in 0..=s {
            let m = s - n;
            let red = ibp_reduce(m, n);
            let terminal = integral_exact(red.terminal.m, red.terminal.n);
            assert_eq!(
                red.reconstruct(&terminal),
                integral_exact(m, n),
                "reduction of ({m},{n})"
            );
            pairs += 1;
        }
    }
    println!("PASS: criterion 8: IBP reduction reconstructs the oracle exactly on all {pairs} pairs with m+n <= 20");
}

#[test]
fn criterion_09_oracle_cross_agreement() {
    let mut worst: f64 = 0.0;
    for s in 0..=12u32 {
        for n in 0..=s {
            let m = s - n;
            let exact = integral_exact(m, n).to_f64().unwrap();
            let q = quadrature(m, n, 1e-10).unwrap();
            assert!(q.converged, "({m},{n}) did not converge");
            let err = (q.value - exact).abs();
            let bound = if exact == 0.0 {
                1e-9
            } else {
                1e-9 * exact.abs()
            };
            assert!(
                err <= bound,
                "({m},{n}): quadrature {} vs exact {exact} (err {err:e})",
                q.value
            );
            worst = worst.max(if exact == 0.0 { err } else { err / exact.abs() });
        }
    }
    println!(
        "PASS: criterion 9: quadrature at 1e-10 matches the exact oracle within 1e-9 \
         (absolute at exact zeros) for m+n <= 12; worst observed {worst:.2e}"
    );
}

#[test]
fn criterion_10_transform_identity() {
    for z in [0.5, 1.0, 2.0] {
        let check = cosine_transform_check(z, 1e-8).unwrap();
        assert!(check.converged, "z={z} did not converge");
        let rel = (check.value - check.expected).abs() / check.expected;
        assert!(rel <= 1e-6, "z={z}: relative deviation {rel:e}");
    }
    println!("PASS: criterion 10: cosine-transform identity holds within 1e-6 relative at z in {{0.5, 1, 2}}");
}

#[test]
fn criterion_11_spot_values() {
    assert_eq!(integral_exact(0, 0), pi_frac(1, 4));
    assert_eq!(integral_exact(1, 0), rat(-1, 2));
    assert_eq!(integral_exact(1, 1), pi_frac(1, 8));
    assert_eq!(integral_exact(3, 0), rat(2, 1));
    assert_eq!(integral_exact(3, 2), rat(-2, 1));
    println!("PASS: criterion 11: spot values pi/4, -1/2, pi/8, 2, -2 all exact");
}
