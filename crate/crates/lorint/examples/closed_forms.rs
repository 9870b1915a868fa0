//! The two even-case closed forms side by side with the exact oracle.
//!
//! Both share the magnitude (m+n)! pi / 2^(m+n+2); they differ only in sign.
//! The literal form uses the printed sign factor (+1 unless m = n = odd);
//! the corrected form restores the derivative phase (-1)^(n+(m+n)/2).
//!
//! ```sh
//! cargo run --example closed_forms
//! ```

use lorint::closedform::{epsilon, even_case_corrected, even_case_paper, odd_case};
use lorint::oracle::integral_exact;

fn main() {
    println!("even case: oracle vs literal vs corrected\n");
    println!(
        "{:>3} {:>3} {:>4} | {:>12} {:>12} {:>12}",
        "m", "n", "eps", "oracle", "literal", "corrected"
    );
    for s in (0..=8u32).step_by(2) {
        for n in 0..=s / 2 {
            let m = s - n;
            let oracle = integral_exact(m, n);
            let literal = even_case_paper(m, n).unwrap();
            let corrected = even_case_corrected(m, n).unwrap();
            let marker = if literal == oracle {
                " "
            } else {
                "<- sign flip"
            };
            println!(
                "{m:>3} {n:>3} {:>4} | {:>12} {:>12} {:>12} {marker}",
                epsilon(m, n).unwrap(),
                oracle.to_string(),
                literal.to_string(),
                corrected.to_string()
            );
        }
    }

    println!("\nodd case (single formula, exact everywhere):\n");
    for s in [1u32, 3, 5, 7] {
        for n in 0..=s / 2 {
            let m = s - n;
            let closed = odd_case(m, n).unwrap();
            let oracle = integral_exact(m, n);
            assert_eq!(closed, oracle);
            println!("I({m},{n}) = {closed}");
        }
    }
}
