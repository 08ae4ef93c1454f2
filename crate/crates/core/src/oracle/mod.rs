//! Column-by-column dynamic programming of the decomposition recurrences.
//!
//! Every recurrence writes the generating function of polyominoes whose
//! first column has `a` cells as `x y^a` plus `x` times a weighted sum over
//! the polyomino left after deleting the first column, indexed by the size
//! `s` of its first column. Layer `m` holds the polyominoes with exactly `m`
//! columns and depends only on layer `m - 1`, so one pass per layer is
//! exact, including the `pqx` self-terms.

mod residual;

pub use residual::kernel_residual;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::DEFAULT_SAFETY_BOUND;
use crate::series::{Mono, MultiSeries, Rational, Truncation, Var};

/// Counts keyed by `[columns, vertical half-perimeter, B, U]`.
pub type StatPoly = BTreeMap<[u32; 4], u128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleFamily {
    F,
    Gbt,
    Gt,
    Gb,
    G,
}

impl OracleFamily {
    pub fn name(self) -> &'static str {
        match self {
            OracleFamily::F => "F",
            OracleFamily::Gbt => "G^bt",
            OracleFamily::Gt => "G^t",
            OracleFamily::Gb => "G^b",
            OracleFamily::G => "G",
        }
    }
}

/// Deliberate defects for negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// `(a - 1 - s)` gluing multiplicities become `(a - s)`.
    GluingWeight,
    /// Gluings flush at the bottom are marked `p^2` instead of `p`.
    BottomLevelOffByOne,
}

/// `F_a`, `G_a`, ... split by first-column size `a` and column count `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnIndexedGf {
    pub family: OracleFamily,
    pub bound: u32,
    /// `(a, m) -> polynomial`; absent entries are zero.
    pub entries: BTreeMap<(u32, u32), StatPoly>,
}

impl ColumnIndexedGf {
    fn new(family: OracleFamily, bound: u32) -> ColumnIndexedGf {
        ColumnIndexedGf {
            family,
            bound,
            entries: BTreeMap::new(),
        }
    }

    pub fn get(&self, a: u32, m: u32) -> Option<&StatPoly> {
        self.entries.get(&(a, m))
    }

    /// Counts keyed by the exponent vector `[2v, h, B, U, a - 1]` of
    /// `t^{2v} y^h p^B q^U u^{a-1}`.
    pub fn table(&self) -> BTreeMap<[u32; 5], u128> {
        let mut out = BTreeMap::new();
        for (&(a, _), poly) in &self.entries {
            for (k, &c) in poly {
                *out.entry([2 * k[0], k[1], k[2], k[3], a - 1]).or_default() += c;
            }
        }
        out
    }

    /// The full series in `t, y, p, q, u`.
    pub fn series(&self) -> Result<MultiSeries> {
        let ring = Truncation::half_perimeter(self.bound, &Var::ALL)?;
        Ok(MultiSeries::from_terms(
            &ring,
            self.table()
                .into_iter()
                .map(|(k, c)| (Mono::new(k), Rational::from_integer(c.into()))),
        ))
    }
}

/// Source index meaning "the family being computed".
const SELF: usize = usize::MAX;

/// One gluing contribution: `coeff * y^dy p^dp q^dq`.
#[derive(Debug, Clone, Copy)]
struct Term {
    coeff: u128,
    dy: u32,
    dp: u32,
    dq: u32,
}

fn term(coeff: u128, dy: u32, dp: u32, dq: u32) -> Term {
    Term { coeff, dy, dp, dq }
}

/// `y^lo + ... + y^hi` (empty when `lo > hi`).
fn y_range(lo: u32, hi: u32) -> impl Iterator<Item = Term> {
    (lo..=hi).map(|j| term(1, j, 0, 0))
}

/// Recurrence runner with a half-perimeter bound.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    bound: u32,
    mutation: Option<Mutation>,
}

impl Oracle {
    pub fn new(bound: u32) -> Result<Oracle> {
        if bound < 2 {
            return Err(Error::BoundTooSmall {
                requested: bound,
                min: 2,
            });
        }
        if bound > DEFAULT_SAFETY_BOUND {
            return Err(Error::BoundExceeded {
                requested: bound,
                limit: DEFAULT_SAFETY_BOUND,
            });
        }
        Ok(Oracle {
            bound,
            mutation: None,
        })
    }

    pub fn with_mutation(mut self, mutation: Option<Mutation>) -> Oracle {
        self.mutation = mutation;
        self
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    fn gluing(&self, a: u32, s: u32) -> u128 {
        let w = match self.mutation {
            Some(Mutation::GluingWeight) => a as i64 - s as i64,
            _ => a as i64 - 1 - s as i64,
        };
        w.max(0) as u128
    }

    fn extra(&self, a: u32, s: u32) -> u128 {
        let w = match self.mutation {
            Some(Mutation::GluingWeight) => s as i64 - a as i64,
            _ => s as i64 - 1 - a as i64,
        };
        w.max(0) as u128
    }

    fn p_exp(&self) -> u32 {
        match self.mutation {
            Some(Mutation::BottomLevelOffByOne) => 2,
            _ => 1,
        }
    }

    /// Add `x * mult * src` into `dst`, dropping terms beyond the bound.
    fn glue(&self, dst: &mut StatPoly, src: &StatPoly, mult: &[Term]) -> Result<()> {
        for (k, &c) in src {
            for t in mult {
                if t.coeff == 0 {
                    continue;
                }
                let key = [k[0] + 1, k[1] + t.dy, k[2] + t.dp, k[3] + t.dq];
                if key[0] + key[1] > self.bound {
                    continue;
                }
                let add = c.checked_mul(t.coeff).ok_or(Error::Overflow)?;
                let e = dst.entry(key).or_default();
                *e = e.checked_add(add).ok_or(Error::Overflow)?;
            }
        }
        Ok(())
    }

    fn seed(&self, gf: &mut ColumnIndexedGf) {
        for a in 1..self.bound {
            let mut p = StatPoly::new();
            p.insert([1, a, 0, 0], 1);
            gf.entries.insert((a, 1), p);
        }
    }

    /// Run layers `2..` of a recurrence whose contributions for `(a, s)` come
    /// from `rule`, which returns `(source index, terms)` pairs; the index
    /// points into `sources` or is [`SELF`].
    fn run_layers<R>(
        &self,
        gf: &mut ColumnIndexedGf,
        sources: &[&ColumnIndexedGf],
        rule: R,
    ) -> Result<()>
    where
        R: Fn(u32, u32) -> Vec<(usize, Vec<Term>)>,
    {
        for m in 2..self.bound {
            let mut layer: BTreeMap<u32, StatPoly> = BTreeMap::new();
            for a in 1..=self.bound - m {
                let mut acc = StatPoly::new();
                for s in 1..self.bound {
                    for (idx, terms) in rule(a, s) {
                        let src = if idx == SELF { &*gf } else { sources[idx] };
                        if let Some(poly) = src.get(s, m - 1) {
                            self.glue(&mut acc, poly, &terms)?;
                        }
                    }
                }
                if !acc.is_empty() {
                    layer.insert(a, acc);
                }
            }
            for (a, poly) in layer {
                gf.entries.insert((a, m), poly);
            }
        }
        Ok(())
    }

    /// Column-convex polyominoes.
    pub fn run_f(&self) -> Result<ColumnIndexedGf> {
        let mut gf = ColumnIndexedGf::new(OracleFamily::F, self.bound);
        self.seed(&mut gf);
        let pe = self.p_exp();
        self.run_layers(&mut gf, &[], |a, s| {
            let mut t = Vec::new();
            if s < a {
                t.push(term(self.gluing(a, s), a - s, 0, 0));
                t.push(term(1, a - s, pe, 0));
                t.push(term(1, a - s, 0, 1));
            }
            if s == a {
                t.push(term(1, 0, pe, 1));
            }
            if (2..=a).contains(&s) {
                t.extend(y_range(a + 1 - s, a - 1).map(|x| Term { coeff: 2, ..x }));
            }
            if s > a {
                t.extend(y_range(1, a - 1).map(|x| Term { coeff: 2, ..x }));
                t.push(term(1, 0, pe, 0));
                t.push(term(1, 0, 0, 1));
                t.push(term(self.extra(a, s), 0, 0, 0));
            }
            alloc::vec![(SELF, t)]
        })?;
        Ok(gf)
    }

    fn run_gbt(&self) -> Result<ColumnIndexedGf> {
        let mut gf = ColumnIndexedGf::new(OracleFamily::Gbt, self.bound);
        self.seed(&mut gf);
        let pe = self.p_exp();
        self.run_layers(&mut gf, &[], |a, s| {
            let mut t = Vec::new();
            if s < a {
                t.push(term(self.gluing(a, s), a - s, 0, 0));
                t.push(term(1, a - s, pe, 0));
                t.push(term(1, a - s, 0, 1));
            }
            if s == a {
                t.push(term(1, 0, pe, 1));
            }
            alloc::vec![(SELF, t)]
        })?;
        Ok(gf)
    }

    /// One-sided family: `top = true` gives `G^t`, otherwise the mirrored
    /// recurrence for `G^b`, written out independently.
    fn run_one_sided(&self, gbt: &ColumnIndexedGf, top: bool) -> Result<ColumnIndexedGf> {
        let family = if top {
            OracleFamily::Gt
        } else {
            OracleFamily::Gb
        };
        let mut gf = ColumnIndexedGf::new(family, self.bound);
        self.seed(&mut gf);
        let pe = self.p_exp();
        // Level marks: `flush_same` is the level shared with the anchored
        // side, `flush_other` the free side.
        let (same, other) = if top {
            ((0, 1), (pe, 0))
        } else {
            ((pe, 0), (0, 1))
        };
        self.run_layers(&mut gf, &[gbt], |a, s| {
            let mut from_bt = Vec::new();
            let mut from_self = Vec::new();
            if s < a {
                from_bt.push(term(self.gluing(a, s), a - s, 0, 0));
                from_bt.push(term(1, a - s, same.0, same.1));
                from_self.push(term(1, a - s, other.0, other.1));
            }
            if s == a {
                from_self.push(term(1, 0, pe, 1));
            }
            if (2..=a).contains(&s) {
                from_self.extend(y_range(a + 1 - s, a - 1));
            }
            if s > a {
                from_self.extend(y_range(1, a - 1));
                from_self.push(term(1, 0, same.0, same.1));
            }
            alloc::vec![(0, from_bt), (SELF, from_self)]
        })?;
        Ok(gf)
    }

    /// `(G^bt, G^t, G^b, G)`.
    pub fn run_g_chain(&self) -> Result<[ColumnIndexedGf; 4]> {
        let gbt = self.run_gbt()?;
        let gt = self.run_one_sided(&gbt, true)?;
        let gb = self.run_one_sided(&gbt, false)?;
        let mut g = ColumnIndexedGf::new(OracleFamily::G, self.bound);
        self.seed(&mut g);
        let pe = self.p_exp();
        self.run_layers(&mut g, &[&gbt, &gt, &gb], |a, s| {
            let mut from_bt = Vec::new();
            let mut from_t = Vec::new();
            let mut from_b = Vec::new();
            let mut from_self = Vec::new();
            if s < a {
                from_bt.push(term(self.gluing(a, s), a - s, 0, 0));
                from_t.push(term(1, a - s, pe, 0));
                from_b.push(term(1, a - s, 0, 1));
            }
            if s == a {
                from_self.push(term(1, 0, pe, 1));
            }
            if (2..=a).contains(&s) {
                from_t.extend(y_range(a + 1 - s, a - 1));
                from_b.extend(y_range(a + 1 - s, a - 1));
            }
            if s > a {
                from_t.extend(y_range(1, a - 1));
                from_b.extend(y_range(1, a - 1));
                from_self.push(term(1, 0, pe, 0));
                from_self.push(term(1, 0, 0, 1));
                from_self.push(term(self.extra(a, s), 0, 0, 0));
            }
            alloc::vec![(0, from_bt), (1, from_t), (2, from_b), (SELF, from_self)]
        })?;
        Ok([gbt, gt, gb, g])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_layer_is_single_column() {
        let f = Oracle::new(6).unwrap().run_f().unwrap();
        for a in 1..6 {
            let p = f.get(a, 1).unwrap();
            assert_eq!(p.len(), 1);
            assert_eq!(p.get(&[1, a, 0, 0]), Some(&1));
        }
    }

    #[test]
    fn carlitz_counts_by_half_perimeter() {
        let f = Oracle::new(6).unwrap().run_f().unwrap();
        let mut counts = [0u128; 7];
        for poly in f.entries.values() {
            for (k, c) in poly {
                if k[2] == 0 && k[3] == 0 {
                    counts[(k[0] + k[1]) as usize] += c;
                }
            }
        }
        assert_eq!(&counts[2..], [1, 1, 1, 5, 14]);
    }

    #[test]
    fn dominoes_in_g() {
        let [_, _, _, g] = Oracle::new(3).unwrap().run_g_chain().unwrap();
        let total: u128 = g
            .table()
            .iter()
            .filter(|(k, _)| k[0] / 2 + k[1] == 3)
            .map(|(_, c)| c)
            .sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn bound_checks() {
        assert!(Oracle::new(1).is_err());
        assert!(matches!(Oracle::new(17), Err(Error::BoundExceeded { .. })));
    }
}
