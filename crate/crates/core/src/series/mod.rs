//! Exact truncated power series.
//!
//! [`MultiSeries`] is the sparse multivariate workhorse; [`UniSeries`] is a
//! dense univariate fast path used for long perimeter expansions. Both keep
//! integer numerators over one shared denominator, so products never need a
//! per-coefficient gcd.

mod dense;
mod mono;
mod multi;
mod trunc;

pub use dense::UniSeries;
pub use mono::{Mono, Var, NVARS};
pub use multi::{DualPath, MultiSeries};
pub use trunc::Truncation;

/// Exact rational coefficient, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[cfg(test)]
pub(crate) fn rational(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
