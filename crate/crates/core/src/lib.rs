//! Shanks simple cubic function fields over F_q(t).
//!
//! Builds the fields defined by `x^3 - A x^2 - (A+3) x - 1`, computes their
//! invariants (index, genus, regulator), classifies how primes split, and
//! computes divisor and ideal class numbers both exactly (small genus, from
//! the L-polynomial) and approximately (truncated Euler product with an
//! explicit error bound).

pub mod error;
pub mod ff_poly;

pub use error::{Error, Result};
pub mod simple_cubic;
pub mod invariants;
pub mod splitting;
pub mod zeta;
pub mod search;
pub mod cli;
