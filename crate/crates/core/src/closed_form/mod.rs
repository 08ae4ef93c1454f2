//! Series expansions of the explicit generating functions.
//!
//! Every evaluator takes a half-perimeter order `N` and returns a series
//! whose reported coefficients are exact for all monomials with
//! `columns + vertical half-perimeter <= N` (weighted degree `2N` with
//! `t` of weight 1 and `y` of weight 2).

mod column_convex;
mod convex;
mod perimeter;

pub use column_convex::{dq_f1_at_1, f1_00, f1_qq, kernel_numerator, roots as cc_roots};
pub use convex::{
    g1_full, g1_xx_qq, gbt_u, gt_1, gt_1_quotient_form, gt_u, kernel_at_u_prime, kernel_roots,
    u_prime, EndTerms,
};
pub use perimeter::{
    cc_carlitz_perimeter_gf, cc_carlitz_perimeter_gf_in_t, convex_carlitz_perimeter_gf,
    convex_carlitz_perimeter_gf_half, dq_g1_at_1, even_to_uni,
};

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::series::{MultiSeries, Truncation, UniSeries, Var};

/// Handy constants and variables of one ring; inactive variables are zero.
pub(crate) struct Vars {
    pub ring: Truncation,
    pub t: MultiSeries,
    pub y: MultiSeries,
    pub p: MultiSeries,
    pub q: MultiSeries,
    pub u: MultiSeries,
}

impl Vars {
    pub fn new(ring: &Truncation) -> Result<Vars> {
        let var = |v| {
            if ring.is_active(v) {
                MultiSeries::var(ring, v)
            } else {
                Ok(MultiSeries::zero(ring))
            }
        };
        Ok(Vars {
            ring: ring.clone(),
            t: var(Var::T)?,
            y: var(Var::Y)?,
            p: var(Var::P)?,
            q: var(Var::Q)?,
            u: var(Var::U)?,
        })
    }

    pub fn int(&self, c: i64) -> MultiSeries {
        MultiSeries::integer(&self.ring, c)
    }

    pub fn x(&self) -> MultiSeries {
        &self.t * &self.t
    }
}

/// Named evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfTarget {
    F1Qq,
    F1Zero,
    CcCarlitzPerim,
    GbtU,
    GtU,
    Gt1,
    G1Full,
    G1XxQq,
    ConvexCarlitzPerim,
    DqG1AtOne,
    DqF1AtOne,
    CcRoots,
    UPrime,
    ConvexRoots,
}

impl GfTarget {
    pub const ALL: [GfTarget; 14] = [
        GfTarget::F1Qq,
        GfTarget::F1Zero,
        GfTarget::CcCarlitzPerim,
        GfTarget::GbtU,
        GfTarget::GtU,
        GfTarget::Gt1,
        GfTarget::G1Full,
        GfTarget::G1XxQq,
        GfTarget::ConvexCarlitzPerim,
        GfTarget::DqG1AtOne,
        GfTarget::DqF1AtOne,
        GfTarget::CcRoots,
        GfTarget::UPrime,
        GfTarget::ConvexRoots,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GfTarget::F1Qq => "f1-qq",
            GfTarget::F1Zero => "f1-00",
            GfTarget::CcCarlitzPerim => "cc-carlitz-perim",
            GfTarget::GbtU => "gbt-u",
            GfTarget::GtU => "gt-u",
            GfTarget::Gt1 => "gt-1",
            GfTarget::G1Full => "g1-full",
            GfTarget::G1XxQq => "g1-xx-qq",
            GfTarget::ConvexCarlitzPerim => "convex-carlitz-perim",
            GfTarget::DqG1AtOne => "dq-g1",
            GfTarget::DqF1AtOne => "dq-f1",
            GfTarget::CcRoots => "roots-cc",
            GfTarget::UPrime => "u-prime",
            GfTarget::ConvexRoots => "roots-convex",
        }
    }

    /// Smallest meaningful order.
    pub fn min_order(self) -> u32 {
        match self {
            GfTarget::F1Qq
            | GfTarget::F1Zero
            | GfTarget::CcCarlitzPerim
            | GfTarget::G1Full
            | GfTarget::G1XxQq => 2,
            _ => 1,
        }
    }

    pub fn evaluate(self, order: u32) -> Result<Expansion> {
        if order < self.min_order() {
            return Err(Error::OrderTooSmall {
                requested: order,
                min: self.min_order(),
            });
        }
        let uni = |name, series| Expansion::Univariate {
            variable: name,
            series,
        };
        Ok(match self {
            GfTarget::F1Qq => Expansion::Multi(f1_qq(order)?),
            GfTarget::F1Zero => Expansion::Multi(f1_00(order)?),
            GfTarget::CcCarlitzPerim => uni("x", cc_carlitz_perimeter_gf(order as usize)?),
            GfTarget::GbtU => Expansion::Multi(gbt_u(order)?),
            GfTarget::GtU => Expansion::Multi(gt_u(order)?),
            GfTarget::Gt1 => Expansion::Multi(gt_1(order)?),
            GfTarget::G1Full => Expansion::Multi(g1_full(order, EndTerms::default())?),
            GfTarget::G1XxQq => Expansion::Multi(g1_xx_qq(order)?),
            GfTarget::ConvexCarlitzPerim => uni("x", convex_carlitz_perimeter_gf(order as usize)?),
            GfTarget::DqG1AtOne => uni("x", dq_g1_at_1(order as usize)?),
            GfTarget::DqF1AtOne => uni("x", even_to_uni(&dq_f1_at_1(order)?)?),
            GfTarget::CcRoots => {
                let (a, b) = cc_roots(order)?;
                Expansion::Pair(a, b)
            }
            GfTarget::UPrime => Expansion::Multi(u_prime(order)?),
            GfTarget::ConvexRoots => {
                let (a, b) = kernel_roots(order)?;
                Expansion::Pair(a, b)
            }
        })
    }
}

impl fmt::Display for GfTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GfTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<GfTarget> {
        GfTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTarget(String::from(s)))
    }
}

/// Result of an evaluator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    Multi(MultiSeries),
    /// The two branches of a root pair.
    Pair(MultiSeries, MultiSeries),
    /// Dense series in one named variable.
    Univariate {
        variable: &'static str,
        series: UniSeries,
    },
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_names_round_trip() {
        for t in GfTarget::ALL {
            assert_eq!(t.name().parse::<GfTarget>().unwrap(), t);
        }
        assert!("nope".parse::<GfTarget>().is_err());
    }

    #[test]
    fn order_zero_is_rejected() {
        assert!(matches!(
            GfTarget::DqG1AtOne.evaluate(0),
            Err(Error::OrderTooSmall { .. })
        ));
    }
}
