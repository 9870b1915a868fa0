//! The derivative engine: numerator polynomials P_n with
//! f_n(x) = P_n(x)/(1+x^2)^(n+1), their boundary values, and the
//! differentiated-ODE identity they satisfy.
//!
//! ```sh
//! cargo run --example derivatives
//! ```

use lorint::derivkernel::{derivative_rep, ode_residual, value_at_zero};

fn main() {
    println!("f_n(x) = d^n/dx^n 1/(1+x^2) = P_n(x) / (1+x^2)^(n+1)\n");
    for n in 0..=8u32 {
        let rep = derivative_rep(n);
        println!(
            "P_{n} = {}   (denominator exponent {})",
            rep.numerator(),
            rep.denominator_exponent()
        );
    }

    println!("\nboundary values f_n(0) = n! cos(n pi/2):");
    for n in 0..=8u32 {
        println!(
            "  f_{n}(0) = {:>6}   P_{n}(0) = {}",
            value_at_zero(n),
            derivative_rep(n).numerator().coeff(0)
        );
    }

    println!("\nresidual of (1+x^2) f_(n+2) + 2(n+2) x f_(n+1) + (n+2)(n+1) f_n:");
    for n in [0u32, 5, 15, 30] {
        println!("  n = {n:>2}: {}", ode_residual(n));
    }
}
