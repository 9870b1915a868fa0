//! The full verification report: every pair up to a given m+n, compared
//! across the exact oracle, the literal closed form, the corrected even-case
//! candidate and quadrature, with a status classification per pair.
//!
//! ```sh
//! cargo run --example verification_report
//! ```

use lorint::cli::VerificationReport;

fn main() {
    let report = VerificationReport::build(10, 1e-10);
    print!("{}", report.to_markdown());
    println!(
        "\nexit code a CLI `verify` run would produce: {}",
        report.exit_code()
    );
}
