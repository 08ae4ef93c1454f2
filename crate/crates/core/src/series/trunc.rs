use crate::error::{Error, Result};

use super::mono::{Mono, Var, MAX_EXPONENT, NVARS};

/// Which monomials a series keeps.
///
/// A monomial survives when every exponent is within its per-variable cap
/// and, if a total cap is set, its weighted degree is within that cap. The
/// kept set is closed under taking divisors, so truncated arithmetic is exact
/// arithmetic modulo the ideal of dropped monomials.
///
/// A variable with cap 0 is inactive. A variable with weight 0 is a
/// polynomial variable: its cap bounds degrees that the computation never
/// reaches, so evaluating it at a constant is exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Truncation {
    weights: [u32; NVARS],
    caps: [u32; NVARS],
    total: Option<u32>,
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation::constants()
    }
}

impl Truncation {
    /// Only constants survive.
    pub fn constants() -> Truncation {
        Truncation {
            weights: [0; NVARS],
            caps: [0; NVARS],
            total: None,
        }
    }

    pub fn with_var(mut self, v: Var, weight: u32, cap: u32) -> Result<Truncation> {
        if cap > MAX_EXPONENT {
            return Err(Error::CapTooLarge(cap));
        }
        self.weights[v.index()] = weight;
        self.caps[v.index()] = cap;
        Ok(self)
    }

    pub fn with_total(mut self, total: u32) -> Truncation {
        self.total = Some(total);
        self
    }

    /// Ring for objects counted by half-perimeter `order`: `t` has weight 1,
    /// `y` weight 2 and the weighted total is `2 * order`. The remaining
    /// requested variables are polynomial variables whose cap never binds
    /// because they always travel with a power of `t` or `y`.
    pub fn half_perimeter(order: u32, vars: &[Var]) -> Result<Truncation> {
        let total = 2 * order;
        let mut tr = Truncation::constants().with_total(total);
        for &v in vars {
            tr = match v {
                Var::T => tr.with_var(v, 1, total)?,
                Var::Y => tr.with_var(v, 2, order)?,
                _ => tr.with_var(v, 0, total)?,
            };
        }
        Ok(tr)
    }

    pub fn weight(&self, v: Var) -> u32 {
        self.weights[v.index()]
    }

    pub fn cap(&self, v: Var) -> u32 {
        self.caps[v.index()]
    }

    pub fn total(&self) -> Option<u32> {
        self.total
    }

    pub fn is_active(&self, v: Var) -> bool {
        self.caps[v.index()] > 0
    }

    pub fn active_vars(&self) -> impl Iterator<Item = Var> + '_ {
        Var::ALL.into_iter().filter(|&v| self.is_active(v))
    }

    #[inline]
    pub fn weighted_degree(&self, m: Mono) -> u32 {
        let mut d = 0;
        for v in Var::ALL {
            d += self.weights[v.index()] * m.exp(v);
        }
        d
    }

    #[inline]
    pub(crate) fn fits_caps(&self, m: Mono) -> bool {
        Var::ALL.iter().all(|&v| m.exp(v) <= self.caps[v.index()])
    }

    #[inline]
    pub fn admits(&self, m: Mono) -> bool {
        self.fits_caps(m) && self.total.is_none_or(|t| self.weighted_degree(m) <= t)
    }

    /// Common refinement: minimum of every cap. Variables active on both
    /// sides must carry the same weight.
    pub fn meet(&self, other: &Truncation) -> Result<Truncation> {
        let mut out = Truncation::constants();
        for v in Var::ALL {
            let i = v.index();
            let (a, b) = (self.is_active(v), other.is_active(v));
            if a && b && self.weights[i] != other.weights[i] {
                return Err(Error::IncompatibleTruncation(v));
            }
            out.caps[i] = self.caps[i].min(other.caps[i]);
            out.weights[i] = if a { self.weights[i] } else { other.weights[i] };
        }
        out.total = match (self.total, other.total) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Ok(out)
    }

    pub fn without(&self, v: Var) -> Truncation {
        let mut out = self.clone();
        out.caps[v.index()] = 0;
        out
    }

    pub fn with_cap(&self, v: Var, cap: u32) -> Truncation {
        let mut out = self.clone();
        out.caps[v.index()] = cap.min(MAX_EXPONENT);
        out
    }

    pub fn with_weight(&self, v: Var, weight: u32) -> Truncation {
        let mut out = self.clone();
        out.weights[v.index()] = weight;
        out
    }

    pub fn with_total_cap(&self, total: Option<u32>) -> Truncation {
        let mut out = self.clone();
        out.total = total;
        out
    }

    /// Lower the total cap by `by` (saturating at zero).
    pub fn lower_total(&self, by: u32) -> Truncation {
        let mut out = self.clone();
        out.total = out.total.map(|t| t.saturating_sub(by));
        out
    }

    pub fn swap(&self, a: Var, b: Var) -> Truncation {
        let mut out = self.clone();
        out.caps.swap(a.index(), b.index());
        out.weights.swap(a.index(), b.index());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meet_takes_minimum_and_checks_weights() {
        let a = Truncation::half_perimeter(5, &[Var::T, Var::Y, Var::Q]).unwrap();
        let b = Truncation::half_perimeter(4, &[Var::T, Var::Y]).unwrap();
        let m = a.meet(&b).unwrap();
        assert_eq!(m.total(), Some(8));
        assert!(!m.is_active(Var::Q));
        let bad = Truncation::constants().with_var(Var::T, 2, 10).unwrap();
        assert_eq!(a.meet(&bad), Err(Error::IncompatibleTruncation(Var::T)));
    }

    #[test]
    fn admits_uses_weighted_total() {
        let tr = Truncation::half_perimeter(3, &[Var::T, Var::Y]).unwrap();
        assert!(tr.admits(Mono::new([2, 2, 0, 0, 0])));
        assert!(!tr.admits(Mono::new([1, 3, 0, 0, 0])));
        assert!(!tr.admits(Mono::var(Var::Q, 1)));
    }
}
