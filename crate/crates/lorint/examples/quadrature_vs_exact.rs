//! Floating-point quadrature against the exact oracle.
//!
//! The integrals run over [0, inf), but under x = tan(theta) every member
//! becomes a smooth integral over [0, pi/2], so plain node-doubling
//! refinement reaches 1e-10 without any tail handling. Exact zeros like
//! I(2,1) land at the roundoff floor.
//!
//! ```sh
//! cargo run --example quadrature_vs_exact
//! ```

use lorint::oracle::{integral_exact, quadrature};

fn main() {
    println!(
        "{:>3} {:>3} {:>24} {:>24} {:>10} {:>7}",
        "m", "n", "exact", "quadrature", "|diff|", "evals"
    );
    for s in 0..=8u32 {
        for n in 0..=s / 2 {
            let m = s - n;
            let exact = integral_exact(m, n).to_f64().unwrap();
            let q = quadrature(m, n, 1e-10).unwrap();
            println!(
                "{m:>3} {n:>3} {exact:>24.16e} {:>24.16e} {:>10.2e} {:>7}",
                q.value,
                (q.value - exact).abs(),
                q.evaluations
            );
        }
    }
}
