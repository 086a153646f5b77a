//! Exact statistics of alpha-positioned prime factors.
//!
//! The crate pairs a brute-force exactness substrate (a smallest-prime-factor
//! table and full scans over it) with evaluators for every closed-form
//! constant and asymptotic main term those statistics converge to:
//!
//! - [`sieve`]: the factor table, factorization queries, and the cache file.
//! - [`census`]: per-prime counts of the alpha-positioned factor, parity
//!   splits, empirical CDFs, and the mean logarithm.
//! - [`mertens`]: dissected Mertens sums S(y,k), rough counts Phi_k(x,y),
//!   and their asymptotic descriptions.
//! - [`constants`]: Euler products with rigorous truncation tails, the
//!   fractional-power averages, theorem constants, and exponent branches.
//! - [`expsums`]: truncated and twisted exponential sums with their bounds.
//! - [`theory`]: regime selection and main-term evaluation per (x, p, alpha).

pub mod alpha;
pub mod census;
pub mod constants;
pub mod error;
pub mod expsums;
pub mod kahan;
pub mod mertens;
pub mod sieve;
pub mod special;
pub mod theory;

pub use alpha::Alpha;
pub use error::{Error, Result};
pub use sieve::{build_factor_table, load_cache, FactorTable, Factorization};
pub use special::gaussian_cdf;
