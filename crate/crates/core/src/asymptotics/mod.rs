//! Leading-order asymptotic formulas and their agreement with exact
//! coefficients.

mod real;

pub use real::Real;

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::closed_form::{
    cc_carlitz_perimeter_gf, convex_carlitz_perimeter_gf_half, dq_f1_at_1, dq_g1_at_1, even_to_uni,
};
use crate::error::{Error, Result};
use crate::series::UniSeries;

/// Significant digits of a prediction unless stated otherwise.
pub const DEFAULT_DIGITS: u32 = 50;
const GUARD: u32 = 30;

/// Largest index for which `CcLevels` exact coefficients are produced; they
/// come from the multivariate expansion.
pub const CC_LEVELS_LIMIT: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AsymptoticTarget {
    /// Column-convex Carlitz polyominoes by half-perimeter.
    CcCarlitz,
    /// Total `B + U` over column-convex polyominoes.
    CcLevels,
    /// Convex Carlitz polyominoes by half-perimeter.
    ConvexCarlitz,
    /// Total `B + U` over convex polyominoes.
    ConvexLevels,
}

impl AsymptoticTarget {
    pub const ALL: [AsymptoticTarget; 4] = [
        AsymptoticTarget::CcCarlitz,
        AsymptoticTarget::CcLevels,
        AsymptoticTarget::ConvexCarlitz,
        AsymptoticTarget::ConvexLevels,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AsymptoticTarget::CcCarlitz => "cc-carlitz",
            AsymptoticTarget::CcLevels => "cc-levels",
            AsymptoticTarget::ConvexCarlitz => "convex-carlitz",
            AsymptoticTarget::ConvexLevels => "convex-levels",
        }
    }

    /// Exponential growth base of the prediction.
    pub fn growth_base(self, scale: u32) -> Real {
        let int = |v: i64| Real::from_int(v, scale);
        match self {
            AsymptoticTarget::CcCarlitz | AsymptoticTarget::ConvexLevels => int(4),
            AsymptoticTarget::CcLevels => &(&int(3) + &int(8).sqrt()) / &int(2),
            AsymptoticTarget::ConvexCarlitz => &(&int(3) + &int(5).sqrt()) / &int(2),
        }
    }
}

impl fmt::Display for AsymptoticTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AsymptoticTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<AsymptoticTarget> {
        AsymptoticTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTarget(String::from(s)))
    }
}

fn check_index(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::OrderTooSmall {
            requested: n,
            min: 2,
        });
    }
    Ok(())
}

pub fn predict(target: AsymptoticTarget, n: u32) -> Result<Real> {
    predict_with(target, n, DEFAULT_DIGITS)
}

/// Prediction carrying `digits` significant digits plus guard digits.
pub fn predict_with(target: AsymptoticTarget, n: u32, digits: u32) -> Result<Real> {
    check_index(n)?;
    let scale = digits + GUARD;
    let int = |v: i64| Real::from_int(v, scale);
    let nn = int(n.into());
    Ok(match target {
        AsymptoticTarget::CcCarlitz => {
            let c = &(&(&int(9) * &int(2).sqrt()) * &(&int(14) + &(&int(3) * &int(3).sqrt())))
                / &int(2704);
            let denom = (&Real::pi(scale) * &nn.powi(3)).sqrt();
            &(&c * &int(4).powi(n)) / &denom
        }
        AsymptoticTarget::CcLevels => {
            let r2 = int(2).sqrt();
            let a = &(&int(1588) - &(&int(999) * &r2)) * &(&(&int(5) * &r2) - &int(7)).sqrt();
            let b = &(&int(6) * &(&(&int(51) * &r2) - &int(28)))
                * &(&(&int(99) * &r2) - &int(140)).sqrt();
            let k = &(&a + &b) / &int(2209);
            let denom = (&Real::pi(scale) * &nn).sqrt();
            &(&k * &target.growth_base(scale).powi(n)) / &denom
        }
        AsymptoticTarget::ConvexCarlitz => {
            let lead = Real::from_ratio(n + 1, 10, scale);
            &lead * &target.growth_base(scale).powi(n - 2)
        }
        AsymptoticTarget::ConvexLevels if n >= 4 => &(&nn * &nn) * &int(4).powi(n - 4),
        AsymptoticTarget::ConvexLevels => &(&nn * &nn) / &int(4).powi(4 - n),
    })
}

/// Exact coefficients `a(0..=max_n)` of the quantity a target predicts.
pub fn exact_coefficients(target: AsymptoticTarget, max_n: u32) -> Result<Vec<BigInt>> {
    let order = max_n as usize;
    let series: UniSeries = match target {
        AsymptoticTarget::CcCarlitz => cc_carlitz_perimeter_gf(order)?,
        AsymptoticTarget::ConvexCarlitz => convex_carlitz_perimeter_gf_half(order)?,
        AsymptoticTarget::ConvexLevels => dq_g1_at_1(order)?,
        AsymptoticTarget::CcLevels => {
            if max_n > CC_LEVELS_LIMIT {
                return Err(Error::BoundExceeded {
                    requested: max_n,
                    limit: CC_LEVELS_LIMIT,
                });
            }
            even_to_uni(&dq_f1_at_1(max_n.max(2))?)?.truncate(order)
        }
    };
    series
        .integer_coeffs()
        .ok_or(Error::NotDivisible("non-integer coefficient"))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceRow {
    pub n: u32,
    pub exact: BigInt,
    pub predicted: Real,
    /// `exact / predicted`.
    pub ratio: Real,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergenceReport {
    pub target: AsymptoticTarget,
    pub rows: Vec<ConvergenceRow>,
    /// `|ratio - 1|` strictly decreases along the rows.
    pub monotone: bool,
}

/// Exact vs predicted at ascending, deduplicated checkpoints.
pub fn convergence_report(
    target: AsymptoticTarget,
    checkpoints: &[u32],
) -> Result<ConvergenceReport> {
    let mut points: Vec<u32> = checkpoints.to_vec();
    points.sort_unstable();
    points.dedup();
    for &n in &points {
        check_index(n)?;
    }
    let Some(&max_n) = points.last() else {
        return Ok(ConvergenceReport {
            target,
            rows: Vec::new(),
            monotone: true,
        });
    };
    let exact = exact_coefficients(target, max_n)?;
    let scale = DEFAULT_DIGITS + GUARD;
    let one = Real::from_int(1, scale);
    let mut rows = Vec::with_capacity(points.len());
    for n in points {
        let predicted = predict(target, n)?;
        let a = exact[n as usize].clone();
        let ratio = &Real::from_int(a.clone(), scale) / &predicted;
        rows.push(ConvergenceRow {
            n,
            exact: a,
            predicted,
            ratio,
        });
    }
    let monotone = rows
        .windows(2)
        .all(|w| (&w[1].ratio - &one).abs() < (&w[0].ratio - &one).abs());
    Ok(ConvergenceReport {
        target,
        rows,
        monotone,
    })
}

/// `a(n+1)/a(n)` minus the growth base.
pub fn growth_deviation(target: AsymptoticTarget, n: u32) -> Result<Real> {
    check_index(n)?;
    let exact = exact_coefficients(target, n + 1)?;
    let scale = DEFAULT_DIGITS + GUARD;
    let ratio = &Real::from_int(exact[n as usize + 1].clone(), scale)
        / &Real::from_int(exact[n as usize].clone(), scale);
    Ok(&ratio - &target.growth_base(scale))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_predictions() {
        assert_eq!(
            predict(AsymptoticTarget::ConvexLevels, 10)
                .unwrap()
                .to_sig_string(50),
            "409600"
        );
        assert_eq!(
            predict(AsymptoticTarget::ConvexCarlitz, 2)
                .unwrap()
                .to_sig_string(50),
            "0.3"
        );
    }

    #[test]
    fn pinned_constants() {
        assert_eq!(
            predict(AsymptoticTarget::CcCarlitz, 10)
                .unwrap()
                .to_sig_string(45),
            "1690.40195619282684453329924525383544182033437"
        );
        assert_eq!(
            predict(AsymptoticTarget::CcLevels, 10)
                .unwrap()
                .to_sig_string(45),
            "246.491603371919163697583070562152981775894426"
        );
    }

    #[test]
    fn predictions_increase() {
        for t in AsymptoticTarget::ALL {
            let mut prev = predict(t, 2).unwrap();
            assert!(prev.is_positive());
            for n in 3..40 {
                let next = predict(t, n).unwrap();
                assert!(next > prev, "{t} at {n}");
                prev = next;
            }
        }
    }

    #[test]
    fn index_below_two_is_rejected() {
        assert!(predict(AsymptoticTarget::CcCarlitz, 1).is_err());
    }

    #[test]
    fn small_exact_values() {
        let a = exact_coefficients(AsymptoticTarget::CcLevels, 9).unwrap();
        let expect: Vec<BigInt> = [0, 0, 0, 2, 10, 52, 276, 1492, 8152, 44886]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(a, expect);
    }
}
