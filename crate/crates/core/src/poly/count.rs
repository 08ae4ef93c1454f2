use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Result;

use super::generate::{Constraints, Generator};
use super::{Column, PolyStats};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    ColumnConvex,
    Convex,
}

/// Convex subfamilies by which extreme rows the first column reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    All,
    /// First column reaches the top row (tops never rise).
    Top,
    /// First column reaches the bottom row (bottoms never fall).
    Bottom,
    /// First column spans every row.
    BottomTop,
}

impl Family {
    fn admits(self, cols: &[Column]) -> bool {
        let top = || cols.windows(2).all(|w| w[1].top() <= w[0].top());
        let bottom = || cols.windows(2).all(|w| w[1].bottom >= w[0].bottom);
        match self {
            Family::All => true,
            Family::Top => top(),
            Family::Bottom => bottom(),
            Family::BottomTop => top() && bottom(),
        }
    }
}

/// Counts at one half-perimeter.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountRow {
    pub count: u64,
    /// `(B, U) -> number of polyominoes`, the coefficients of `p^B q^U`.
    pub levels: BTreeMap<(u32, u32), u64>,
}

impl CountRow {
    /// Coefficients of the `p = q` diagonal, indexed by `B + U`.
    pub fn diagonal(&self) -> Vec<u64> {
        let top = self.levels.keys().map(|&(b, u)| b + u).max().unwrap_or(0);
        let mut out = alloc::vec![0; top as usize + 1];
        for (&(b, u), &c) in &self.levels {
            out[(b + u) as usize] += c;
        }
        out
    }

    /// Sum of `B + U` over all polyominoes of this size.
    pub fn level_sum(&self) -> u64 {
        self.levels
            .iter()
            .map(|(&(b, u), &c)| (b + u) as u64 * c)
            .sum()
    }
}

/// Counts indexed by half-perimeter `2..=bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub bound: u32,
    pub rows: BTreeMap<u32, CountRow>,
}

impl CountTable {
    fn empty(bound: u32) -> CountTable {
        CountTable {
            bound,
            rows: (2..=bound).map(|n| (n, CountRow::default())).collect(),
        }
    }

    pub fn counts(&self) -> Vec<(u32, u64)> {
        self.rows.iter().map(|(&n, r)| (n, r.count)).collect()
    }

    pub fn row(&self, n: u32) -> Option<&CountRow> {
        self.rows.get(&n)
    }

    /// Add another table over the same bound, e.g. a different partition.
    pub fn merge(&mut self, other: &CountTable) {
        for (n, row) in &other.rows {
            let mine = self.rows.entry(*n).or_default();
            mine.count += row.count;
            for (k, c) in &row.levels {
                *mine.levels.entry(*k).or_default() += c;
            }
        }
    }
}

fn generator(bound: u32, class: Class, carlitz: bool, limit: u32) -> Result<Generator> {
    Ok(
        Generator::with_safety_bound(bound, limit)?.constraints(Constraints {
            convex: class == Class::Convex,
            carlitz,
        }),
    )
}

/// Aggregate counts and `(B, U)` polynomials by half-perimeter.
pub fn count_by_stats(bound: u32, class: Class, carlitz: bool) -> Result<CountTable> {
    count_partition(
        bound,
        class,
        carlitz,
        1..=bound,
        super::DEFAULT_SAFETY_BOUND,
    )
}

/// Same as [`count_by_stats`] restricted to first-column heights in
/// `heights`; merging the tables of a partition of `1..bound` gives the
/// full table.
pub fn count_partition(
    bound: u32,
    class: Class,
    carlitz: bool,
    heights: core::ops::RangeInclusive<u32>,
    limit: u32,
) -> Result<CountTable> {
    let gen = generator(bound, class, carlitz, limit)?.first_heights(heights);
    let mut table = CountTable::empty(bound);
    gen.for_each(|_, s| {
        let row = table
            .rows
            .get_mut(&s.half_perimeter())
            .expect("within bound");
        row.count += 1;
        *row.levels
            .entry((s.bottom_levels, s.top_levels))
            .or_default() += 1;
    });
    Ok(table)
}

/// Fully refined counts keyed by the exponent vector
/// `[2 * columns, vertical half-perimeter, B, U, first height - 1]`, i.e. the
/// monomial `t^{2v} y^h p^B q^U u^{a-1}` of the generating functions.
pub fn refined_counts(
    bound: u32,
    class: Class,
    family: Family,
    carlitz: bool,
) -> Result<BTreeMap<[u32; 5], u64>> {
    let gen = generator(bound, class, carlitz, super::DEFAULT_SAFETY_BOUND)?;
    let mut out = BTreeMap::new();
    gen.for_each(|cols, s: &PolyStats| {
        if family.admits(cols) {
            let key = [
                2 * s.columns,
                s.vertical_half_perimeter,
                s.bottom_levels,
                s.top_levels,
                cols[0].height - 1,
            ];
            *out.entry(key).or_default() += 1;
        }
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_convex_carlitz_counts() {
        let t = count_by_stats(6, Class::ColumnConvex, true).unwrap();
        assert_eq!(t.counts(), [(2, 1), (3, 1), (4, 1), (5, 5), (6, 14)]);
    }

    #[test]
    fn convex_carlitz_counts() {
        let t = count_by_stats(5, Class::Convex, true).unwrap();
        assert_eq!(t.counts(), [(2, 1), (3, 1), (4, 1), (5, 5)]);
    }

    #[test]
    fn convex_level_polynomial() {
        let t = count_by_stats(3, Class::Convex, false).unwrap();
        // q^2 + 1 on the diagonal: the horizontal domino has B = U = 1
        assert_eq!(t.row(3).unwrap().diagonal(), [1, 0, 1]);
    }

    #[test]
    fn levels_are_symmetric() {
        let t = count_by_stats(8, Class::ColumnConvex, false).unwrap();
        for row in t.rows.values() {
            for (&(b, u), &c) in &row.levels {
                assert_eq!(row.levels.get(&(u, b)), Some(&c));
            }
        }
    }

    #[test]
    fn partitions_merge_to_whole() {
        let whole = count_by_stats(8, Class::ColumnConvex, false).unwrap();
        let mut merged = count_partition(8, Class::ColumnConvex, false, 1..=3, 16).unwrap();
        merged.merge(&count_partition(8, Class::ColumnConvex, false, 4..=7, 16).unwrap());
        assert_eq!(merged, whole);
    }
}
