//! Exact evaluation of family members, with every rendering the crate offers.
//!
//! ```sh
//! cargo run --example evaluate
//! ```

use lorint::oracle::integral_exact;

fn main() {
    println!("I(m,n) = integral over [0,inf) of f_m(x) f_n(x) dx,  f = 1/(1+x^2)\n");
    for (m, n) in [(0, 0), (1, 0), (1, 1), (3, 0), (3, 2), (4, 2), (6, 3)] {
        let value = integral_exact(m, n);
        println!(
            "I({m},{n}) = {:<12} = {:<22.16} json: {}",
            value.to_string(),
            value.to_f64().unwrap(),
            value.to_json_string()
        );
    }

    // values stay exact no matter how deep the factorials get
    let big = integral_exact(15, 15);
    println!("\nI(15,15) = {big}");
    println!("         ~ {:.6e}", big.to_f64().unwrap());
}
