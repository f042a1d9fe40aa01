//! Exact arithmetic for Hilbert polynomials of standard graded algebras.
//!
//! - [`intpoly`]: rational polynomials, binomial-basis helpers, sign patterns.
//! - [`macaulay`]: Macaulay parameters and the Hilbert-polynomial test.
//! - [`realizer`]: leading-coefficient bounds, sign-pattern realization and
//!   closure certificates.
//! - [`oracle`]: brute-force Hilbert functions of monomial quotients.
//! - [`cli`]: the `hilbpoly` command-line front end.

pub mod cli;
pub mod exec;
pub mod intpoly;
pub mod macaulay;
pub mod oracle;
pub mod realizer;

pub use exec::Execution;
pub use intpoly::{binomial_poly, Polynomial, Rational, Sign, SignPattern};
pub use macaulay::{classify_monomial, is_hilbert, macaulay_params, macaulay_term, MacaulayParams};
pub use oracle::{cross_check, hilbert_table, interpolate_eventual, HilbertTable, MonomialIdeal};
pub use realizer::{
    build_certificate, leading_bound, minimal_leading, realize_signs, verify_certificate,
    Certificate, LowerCoefficients,
};
