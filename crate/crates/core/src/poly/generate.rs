use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::error::{Error, Result};

use super::{stats_of, Column, ColumnConvexPoly, PolyStats};

/// Largest half-perimeter bound accepted without an explicit override.
pub const DEFAULT_SAFETY_BOUND: u32 = 16;

/// Pruning rules applied while extending a polyomino column by column.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Constraints {
    /// Bottoms fall then rise and tops rise then fall, i.e. row-convex.
    pub convex: bool,
    /// Adjacent columns differ in both bottom and top.
    pub carlitz: bool,
}

/// Depth-first generator of column-convex polyominoes with
/// `columns + vertical_half_perimeter <= bound`.
///
/// Both quantities only grow as columns are appended, so the bound prunes
/// exactly. Output is in lexicographic order of the column sequence.
#[derive(Debug, Clone)]
pub struct Generator {
    bound: u32,
    constraints: Constraints,
    first_heights: RangeInclusive<u32>,
}

impl Generator {
    pub fn new(bound: u32) -> Result<Generator> {
        Generator::with_safety_bound(bound, DEFAULT_SAFETY_BOUND)
    }

    pub fn with_safety_bound(bound: u32, limit: u32) -> Result<Generator> {
        if bound < 2 {
            return Err(Error::BoundTooSmall {
                requested: bound,
                min: 2,
            });
        }
        if bound > limit {
            return Err(Error::BoundExceeded {
                requested: bound,
                limit,
            });
        }
        Ok(Generator {
            bound,
            constraints: Constraints::default(),
            first_heights: 1..=bound - 1,
        })
    }

    pub fn constraints(mut self, constraints: Constraints) -> Generator {
        self.constraints = constraints;
        self
    }

    /// Restrict to first columns with heights in `heights`; the sets for
    /// disjoint ranges partition the full output.
    pub fn first_heights(mut self, heights: RangeInclusive<u32>) -> Generator {
        let lo = (*heights.start()).max(1);
        let hi = (*heights.end()).min(self.bound - 1);
        self.first_heights = lo..=hi;
        self
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Call `f` for every polyomino without allocating one per item.
    pub fn for_each<F: FnMut(&[Column], &PolyStats)>(&self, mut f: F) {
        let mut cols = Vec::new();
        for h in self.first_heights.clone() {
            cols.push(Column::new(0, h));
            self.extend(&mut cols, h, Phase::default(), &mut f);
            cols.pop();
        }
    }

    fn extend<F: FnMut(&[Column], &PolyStats)>(
        &self,
        cols: &mut Vec<Column>,
        vertical: u32,
        phase: Phase,
        f: &mut F,
    ) {
        f(cols, &stats_of(cols));
        let used = cols.len() as u32 + 1 + vertical;
        if used > self.bound {
            return;
        }
        let slack = (self.bound - used) as i32;
        let last = *cols.last().expect("nonempty");
        for bottom in last.bottom - slack..last.top() {
            let min_height = (last.bottom - bottom + 1).max(1) as u32;
            for height in min_height.. {
                let next = Column::new(bottom, height);
                let cost = height as i32 - last.overlap(next);
                if cost > slack {
                    break;
                }
                let Some(phase) = phase.step(last, next, self.constraints) else {
                    continue;
                };
                cols.push(next);
                self.extend(cols, vertical + cost as u32, phase, f);
                cols.pop();
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Phase {
    bottoms_rising: bool,
    tops_falling: bool,
}

impl Phase {
    fn step(self, last: Column, next: Column, c: Constraints) -> Option<Phase> {
        if c.carlitz && (last.bottom == next.bottom || last.top() == next.top()) {
            return None;
        }
        if c.convex
            && ((self.bottoms_rising && next.bottom < last.bottom)
                || (self.tops_falling && next.top() > last.top()))
        {
            return None;
        }
        Some(Phase {
            bottoms_rising: self.bottoms_rising || next.bottom > last.bottom,
            tops_falling: self.tops_falling || next.top() < last.top(),
        })
    }
}

impl IntoIterator for &Generator {
    type Item = ColumnConvexPoly;
    type IntoIter = alloc::vec::IntoIter<ColumnConvexPoly>;

    fn into_iter(self) -> Self::IntoIter {
        let mut out = Vec::new();
        self.for_each(|cols, _| out.push(ColumnConvexPoly::from_columns_unchecked(cols.to_vec())));
        out.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all(bound: u32, constraints: Constraints) -> Vec<ColumnConvexPoly> {
        Generator::new(bound)
            .unwrap()
            .constraints(constraints)
            .into_iter()
            .collect()
    }

    #[test]
    fn small_bounds() {
        assert_eq!(all(2, Constraints::default()).len(), 1);
        let three = all(3, Constraints::default());
        assert_eq!(three.len(), 3);
        assert!(three.iter().all(|p| p.stats().half_perimeter() <= 3));
    }

    #[test]
    fn bound_checks() {
        assert_eq!(
            Generator::new(17).unwrap_err(),
            Error::BoundExceeded {
                requested: 17,
                limit: 16
            }
        );
        assert!(Generator::new(1).is_err());
        assert!(Generator::with_safety_bound(17, 17).is_ok());
    }

    #[test]
    fn sorted_and_unique() {
        let v = all(7, Constraints::default());
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn pruning_equals_filtering() {
        let full = all(8, Constraints::default());
        for (convex, carlitz) in [(true, false), (false, true), (true, true)] {
            let pruned = all(8, Constraints { convex, carlitz });
            let filtered: Vec<_> = full
                .iter()
                .filter(|p| (!convex || p.is_convex()) && (!carlitz || p.is_carlitz()))
                .cloned()
                .collect();
            assert_eq!(pruned, filtered, "convex={convex} carlitz={carlitz}");
        }
    }

    #[test]
    fn partition_by_first_height() {
        let g = Generator::new(7).unwrap();
        let whole: Vec<_> = g.into_iter().collect();
        let mut parts = Vec::new();
        for h in 1..=6 {
            parts.extend(&g.clone().first_heights(h..=h));
        }
        assert_eq!(whole, parts);
    }
}
