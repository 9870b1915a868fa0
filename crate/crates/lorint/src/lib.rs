//! Exact and numerical evaluation of the two-index integral family
//!
//! ```text
//! I(m,n) = integral from 0 to infinity of f_m(x) * f_n(x) dx,
//! f_k = k-th derivative of 1/(1+x^2)
//! ```
//!
//! Every member of the family is an exact rational-plus-pi value, and this
//! crate computes it three independent ways: a moment-table oracle in exact
//! arithmetic ([`oracle::integral_exact`]), closed-form expressions
//! ([`closedform`]), and adaptive quadrature ([`oracle::quadrature`]). The
//! [`cli`] module ties them together into `eval`, `table`, `verify` and
//! `deriv` subcommands; the `examples/` directory walks each capability.

pub mod cli;
pub mod closedform;
pub mod derivkernel;
pub mod exactnum;
pub mod oracle;

pub use exactnum::{PiRational, Rational};
