//! Numerical check of the cosine-transform identity behind the even-case
//! derivation: the transform of the Lorentzian kernel is (pi/2) e^(-z).
//!
//! ```sh
//! cargo run --example transform_identity
//! ```

use lorint::oracle::cosine_transform_check;

fn main() {
    println!("integral over [0,inf) of cos(xz)/(1+x^2) dx  vs  (pi/2) e^(-z)\n");
    println!(
        "{:>5} {:>22} {:>22} {:>10} {:>9} agrees",
        "z", "integrated", "closed form", "|diff|", "evals"
    );
    for z in [0.0, 0.5, 1.0, 2.0, 5.0] {
        let check = cosine_transform_check(z, 1e-8).unwrap();
        println!(
            "{z:>5} {:>22.15e} {:>22.15e} {:>10.2e} {:>9} {}",
            check.value,
            check.expected,
            (check.value - check.expected).abs(),
            check.evaluations,
            check.agrees
        );
    }
}
