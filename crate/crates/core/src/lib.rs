//! Exact enumeration of column-convex and convex Carlitz polyominoes.
//!
//! A Carlitz polyomino is one in which every pair of adjacent columns
//! differs both in its bottom position and in its top position. This crate
//! provides
//!
//! * [`poly`]: the geometric model, statistics and a brute-force generator,
//! * [`series`]: truncated multivariate power series over the rationals,
//! * [`closed_form`]: series expansions of the algebraic generating functions,
//! * [`oracle`]: column-by-column dynamic programming of the decomposition
//!   recurrences,
//! * [`asymptotics`]: high-precision evaluation of the leading asymptotic
//!   formulas and their convergence against exact coefficients,
//! * [`check`]: the three-way consistency suite tying the above together.
//!
//! # Variable convention
//!
//! Every generating function marks the number of columns with `x` and the
//! vertical half-perimeter with `y`; `p` and `q` mark bottom and top levels.
//! Series are stored in the half-step variable `t` with `x = t^2`, because
//! the kernel roots contain `sqrt(x)`. For a convex polyomino the vertical
//! half-perimeter equals the number of rows. For a column-convex polyomino
//! whose rows fold back it is larger, and `2 * (columns + vertical half)`
//! is its boundary length.
#![no_std]

extern crate alloc;

pub mod asymptotics;
pub mod check;
pub mod closed_form;
mod error;
pub mod oracle;
pub mod poly;
pub mod series;

pub use error::{Error, Result};
pub use series::{MultiSeries, Rational, Truncation, UniSeries, Var};

/// Tag embedded in cached artifacts; bump whenever an evaluator's output changes.
pub const CODE_VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "+series-v1");
