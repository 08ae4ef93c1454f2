//! Column-convex polyominoes as sequences of column intervals.

mod count;
mod generate;

pub use count::{
    count_by_stats, count_partition, refined_counts, Class, CountRow, CountTable, Family,
};
pub use generate::{Constraints, Generator, DEFAULT_SAFETY_BOUND};

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// One column: cells `bottom .. bottom + height` (half-open).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Column {
    pub bottom: i32,
    pub height: u32,
}

impl Column {
    pub fn new(bottom: i32, height: u32) -> Column {
        Column { bottom, height }
    }

    /// One past the top cell.
    #[inline]
    pub fn top(self) -> i32 {
        self.bottom + self.height as i32
    }

    /// Number of rows shared with `other`; positive iff the columns are
    /// edge-connected when placed side by side.
    #[inline]
    pub fn overlap(self, other: Column) -> i32 {
        self.top().min(other.top()) - self.bottom.max(other.bottom)
    }
}

/// A column-convex polyomino, normalized so the first column starts at row 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColumnConvexPoly {
    columns: Vec<Column>,
}

/// Statistics of one polyomino.
///
/// `vertical_half_perimeter` is half the length of the vertical part of the
/// boundary: the first column's height plus, for each later column, the
/// cells that stick out above or below its left neighbour. It equals `rows`
/// exactly when the polyomino is convex; in general it is at least `rows`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolyStats {
    pub rows: u32,
    pub columns: u32,
    pub bottom_levels: u32,
    pub top_levels: u32,
    pub vertical_half_perimeter: u32,
    pub perimeter: u32,
}

impl PolyStats {
    /// Columns plus vertical half-perimeter; the index `n` of all series.
    pub fn half_perimeter(&self) -> u32 {
        self.columns + self.vertical_half_perimeter
    }
}

impl ColumnConvexPoly {
    /// Validate a column list given as `(bottom, height)` pairs.
    pub fn new<I>(columns: I) -> Result<ColumnConvexPoly>
    where
        I: IntoIterator<Item = (i32, u32)>,
    {
        let columns: Vec<Column> = columns
            .into_iter()
            .map(|(b, h)| Column::new(b, h))
            .collect();
        let first = columns
            .first()
            .ok_or(Error::InvalidPolyomino("no columns"))?;
        if first.bottom != 0 {
            return Err(Error::InvalidPolyomino("first column must start at row 0"));
        }
        if columns.iter().any(|c| c.height == 0) {
            return Err(Error::InvalidPolyomino("empty column"));
        }
        if columns.windows(2).any(|w| w[0].overlap(w[1]) <= 0) {
            return Err(Error::InvalidPolyomino(
                "adjacent columns do not share an edge",
            ));
        }
        Ok(ColumnConvexPoly { columns })
    }

    pub(crate) fn from_columns_unchecked(columns: Vec<Column>) -> ColumnConvexPoly {
        ColumnConvexPoly { columns }
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn first_height(&self) -> u32 {
        self.columns[0].height
    }

    pub fn stats(&self) -> PolyStats {
        stats_of(&self.columns)
    }

    pub fn is_carlitz(&self) -> bool {
        self.columns
            .windows(2)
            .all(|w| w[0].bottom != w[1].bottom && w[0].top() != w[1].top())
    }

    /// Row-convexity by direct scan: in every row the occupying columns form
    /// one contiguous range.
    pub fn is_convex(&self) -> bool {
        let lo = self.columns.iter().map(|c| c.bottom).min().unwrap_or(0);
        let hi = self.columns.iter().map(|c| c.top()).max().unwrap_or(0);
        (lo..hi).all(|r| {
            let mut runs = 0;
            let mut inside = false;
            for c in &self.columns {
                let occupied = c.bottom <= r && r < c.top();
                if occupied && !inside {
                    runs += 1;
                }
                inside = occupied;
            }
            runs == 1
        })
    }

    /// Tops never rise from left to right, so the first column reaches the
    /// top row.
    pub fn first_column_holds_top(&self) -> bool {
        self.columns.windows(2).all(|w| w[1].top() <= w[0].top())
    }

    /// Bottoms never fall from left to right, so the first column reaches the
    /// bottom row.
    pub fn first_column_holds_bottom(&self) -> bool {
        self.columns.windows(2).all(|w| w[1].bottom >= w[0].bottom)
    }

    /// Upside-down reflection, renormalized.
    pub fn flip(&self) -> ColumnConvexPoly {
        let shift = self.columns[0].top();
        let columns = self
            .columns
            .iter()
            .map(|c| Column::new(shift - c.top(), c.height))
            .collect();
        ColumnConvexPoly { columns }
    }
}

pub(crate) fn stats_of(columns: &[Column]) -> PolyStats {
    let lo = columns.iter().map(|c| c.bottom).min().unwrap_or(0);
    let hi = columns.iter().map(|c| c.top()).max().unwrap_or(0);
    let mut vertical = columns[0].height;
    let mut bottom_levels = 0;
    let mut top_levels = 0;
    for w in columns.windows(2) {
        vertical += w[1].height - w[0].overlap(w[1]) as u32;
        bottom_levels += u32::from(w[0].bottom == w[1].bottom);
        top_levels += u32::from(w[0].top() == w[1].top());
    }
    let columns_n = columns.len() as u32;
    PolyStats {
        rows: (hi - lo) as u32,
        columns: columns_n,
        bottom_levels,
        top_levels,
        vertical_half_perimeter: vertical,
        perimeter: 2 * (columns_n + vertical),
    }
}

impl fmt::Display for ColumnConvexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.columns.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({},{})", c.bottom, c.height)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cols: &[(i32, u32)]) -> ColumnConvexPoly {
        ColumnConvexPoly::new(cols.iter().copied()).unwrap()
    }

    #[test]
    fn stats_examples() {
        let s = poly(&[(0, 1)]).stats();
        assert_eq!(
            (
                s.rows,
                s.columns,
                s.bottom_levels,
                s.top_levels,
                s.perimeter
            ),
            (1, 1, 0, 0, 4)
        );
        let s = poly(&[(0, 1), (0, 1)]).stats();
        assert_eq!(
            (
                s.rows,
                s.columns,
                s.bottom_levels,
                s.top_levels,
                s.perimeter
            ),
            (1, 2, 1, 1, 6)
        );
        let s = poly(&[(0, 2), (1, 2)]).stats();
        assert_eq!(
            (
                s.rows,
                s.columns,
                s.bottom_levels,
                s.top_levels,
                s.perimeter
            ),
            (3, 2, 0, 0, 10)
        );
    }

    #[test]
    fn vertical_half_perimeter_exceeds_rows_for_folds() {
        // a U shape: the middle column hangs below both neighbours
        let s = poly(&[(0, 2), (-1, 2), (0, 2)]).stats();
        assert_eq!(s.rows, 3);
        assert_eq!(s.vertical_half_perimeter, 4);
        assert_eq!(s.perimeter, 2 * (3 + 4));
    }

    #[test]
    fn rejects_invalid_sequences() {
        assert!(ColumnConvexPoly::new([]).is_err());
        assert!(ColumnConvexPoly::new([(0, 0)]).is_err());
        assert!(ColumnConvexPoly::new([(1, 1)]).is_err());
        assert!(ColumnConvexPoly::new([(0, 1), (1, 1)]).is_err());
        assert!(ColumnConvexPoly::new([(0, 2), (1, 1)]).is_ok());
    }

    #[test]
    fn predicates() {
        assert!(poly(&[(0, 1)]).is_carlitz());
        assert!(!poly(&[(0, 1), (0, 1)]).is_carlitz());
        assert!(poly(&[(0, 2), (1, 2)]).is_carlitz());
        assert!(poly(&[(0, 5)]).is_convex());
        // row 0 is occupied by the outer columns only
        assert!(!poly(&[(0, 2), (1, 1), (0, 2)]).is_convex());
        assert!(ColumnConvexPoly::new([(0, 1), (1, 1), (0, 2)]).is_err());
        assert!(poly(&[(0, 3), (0, 2), (0, 1)]).is_convex());
    }

    #[test]
    fn flip_swaps_levels() {
        let p = poly(&[(0, 3), (0, 2), (1, 3)]);
        let (a, b) = (p.stats(), p.flip().stats());
        assert_eq!(
            (a.bottom_levels, a.top_levels),
            (b.top_levels, b.bottom_levels)
        );
        assert_eq!(p.flip().flip(), p);
    }
}
