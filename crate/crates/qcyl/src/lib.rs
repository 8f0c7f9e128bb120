//! Exact computation of cylindric-partition generating functions.
//!
//! Everything here is exact integer arithmetic on truncated q-series:
//! no floats, no rational coefficients, no symbolic manipulation. The
//! crate computes the generating function `F_c(z,q)` of cylindric
//! partitions with profile `c` three independent ways and compares them
//! coefficient by coefficient:
//!
//! - [`products`]: Borodin's infinite-product evaluation of `F_c(1,q)`,
//!   in both its triple-product and hook-length formulations;
//! - [`solver`]: the Corteel–Welsh coupled q-difference system for the
//!   normalization `G_c(z,q) = (zq;q)_inf F_c(z,q)`, solved by q-adic
//!   fixed-point iteration;
//! - [`sums`]: explicit multi-sum (Rogers–Ramanujan type) formulas
//!   evaluated by a generic lattice-sum engine.
//!
//! A brute-force enumerator ([`oracle`]) provides ground truth on small
//! windows, and [`checks`] computes the bounded-entry polynomials
//! `P_{n,c}`, `Q_{n,c}` together with their positivity and q=1 tests.

pub mod checks;
mod error;
pub mod oracle;
pub mod profiles;
pub mod products;
pub mod qalg;
pub mod solver;
pub mod sums;
#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use profiles::Profile;
pub use qalg::{QLaurent, QSeries, ZQSeries};
