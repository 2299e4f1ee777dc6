//! Exact computation and analysis of Eulerian numbers refined by the
//! first (and last) element of a permutation.
//!
//! The crate provides
//!
//! - closed forms and three independent recurrences for the refined
//!   counts, in arbitrary-precision integers ([`exact`]);
//! - a brute-force enumeration oracle over small symmetric groups that
//!   the fast paths are validated against ([`oracle`]);
//! - exact distributional analysis of the first element given the
//!   descent count: rising moments, expected endpoints, unimodality
//!   classification, and distances to the geometric law ([`moments`]);
//! - truncated formal power series with exact coefficients and the
//!   generating-function identities they satisfy ([`series`]);
//! - Sturm-sequence real-rootedness verdicts for the descent
//!   polynomials of star-shaped posets ([`roots`]);
//! - an exchangeable-pair construction for descents under a uniform
//!   random transposition, exact at small n and Monte Carlo beyond
//!   ([`stein`]).
//!
//! All counts are exact big integers and all probabilities, moments and
//! drifts are exact rationals; floating point appears only in Monte
//! Carlo summaries and one numeric quadrature check.

pub mod arith;
pub mod error;
pub mod exact;
pub mod moments;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod roots;
pub mod series;
pub mod stein;
pub mod verify;

pub use arith::{Count, Ratio};
pub use error::{Error, Result};
