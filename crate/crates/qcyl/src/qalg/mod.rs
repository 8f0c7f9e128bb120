//! Exact arithmetic on truncated q-series and Laurent polynomials.
//!
//! Three value types cover every series in the crate:
//!
//! - [`QSeries`]: a power series in q truncated at an exclusive order N,
//!   stored densely with arbitrary-precision integer coefficients;
//! - [`QLaurent`]: an exact Laurent polynomial in q (finite support,
//!   negative exponents allowed), stored sparsely;
//! - [`ZQSeries`]: a polynomial in z of bounded degree whose coefficients
//!   are `QSeries`, the home of the bivariate functions F_c(z,q), G_c(z,q).
//!
//! All values are immutable from the caller's point of view and safe to
//! share across threads; operations are pure. Division is never general:
//! the only inverses provided are 1/(1-q^e) (stride-e prefix sums) and
//! 1/(zq;q)_inf (Euler's expansion), which keeps everything exact.

mod laurent;
mod qseries;
mod zq;

pub use laurent::{poch_finite, qbinom, QLaurent};
pub use qseries::{inv_poch_inf, QSeries};
pub use zq::ZQSeries;
