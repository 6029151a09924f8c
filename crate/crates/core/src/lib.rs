//! Exact arithmetic for generalized hyperharmonic numbers, poly-Bernoulli
//! polynomials, r-Stirling numbers and hyper-sums of powers, plus a registry
//! of identity and congruence checks that can be run over parameter ranges.
//!
//! Every value is an exact rational; there is no floating point anywhere.

pub mod arith;
pub mod bernoulli;
pub mod error;
pub mod harmonic;
mod memo;
pub mod polybell;
pub mod series;
pub mod stirling;
pub mod verify;

pub use arith::{ExactRational, Modulus};
pub use error::{Error, Result};
