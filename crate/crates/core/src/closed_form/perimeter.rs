//! Univariate perimeter generating functions on the dense fast path.

use crate::error::Result;
use crate::series::{MultiSeries, UniSeries, Var};

/// Raw expansion of the four-term radical expression for column-convex
/// Carlitz polyominoes, in a variable `z` marking unit perimeter.
pub fn cc_carlitz_perimeter_gf_in_t(order: usize) -> Result<UniSeries> {
    let p = |c: &[i64]| UniSeries::from_ints(order, c);
    let den = p(&[-72, 0, 144, 0, -108, 0, 32]);
    let rational = &p(&[1, 0, -1]) * &p(&[-21, 0, 42, 0, -45, 0, 20]);
    let a1 = &(&p(&[1, -1]) * &p(&[9, 0, -9, 2])) * &p(&[1, 2, 1]);
    let a2 = &(&p(&[1, 1]) * &p(&[-9, 0, 9, 2])) * &p(&[1, -2, 1]);
    let a3 = p(&[3, 0, -6, 0, 3]);
    let r1 = p(&[1, -2, 1, -4, 4]);
    let r2 = p(&[1, 2, 1, 4, 4]);
    let base = p(&[1, 0, 1, 0, 4]);
    let r3 = &(&base * &base) - &(&p(&[0, 0, 4]) * &p(&[1, 0, 4, 0, 4]));
    let total =
        &(&(&rational + &(&a1 * &r1.sqrt()?)) - &(&a2 * &r2.sqrt()?)) + &(&a3 * &r3.sqrt()?);
    Ok(&total * &den.inv()?)
}

/// Column-convex Carlitz polyominoes by half-perimeter: coefficient of
/// `x^n` for `n <= order`.
pub fn cc_carlitz_perimeter_gf(order: usize) -> Result<UniSeries> {
    cc_carlitz_perimeter_gf_in_t(2 * order)?.even_part()
}

/// Convex Carlitz polyominoes by half-perimeter: coefficient of `X^n`.
pub fn convex_carlitz_perimeter_gf_half(order: usize) -> Result<UniSeries> {
    let p = |c: &[i64]| UniSeries::from_ints(order, c);
    let p1 = p(&[1, -3, 1]);
    let p2 = p(&[1, 1, 1]);
    let num = UniSeries::from_sparse(
        order,
        &[(2, 1), (3, -3), (5, 4), (6, 3), (7, 4), (9, -3), (10, 1)],
    );
    let d = &(&p1 * &p1) * &(&p2 * &p2);
    let first = &num * &d.inv()?;
    let m = p(&[-1, -1, 1]);
    let radical = (&p1 * &p2).sqrt()?.inv()?.pow(3);
    let second = &(&m * &m).shift(4) * &radical;
    Ok(&first - &second)
}

/// Convex Carlitz polyominoes by unit perimeter: coefficient of `x^k` for
/// `k <= order` counts those with perimeter `k`; odd coefficients vanish.
pub fn convex_carlitz_perimeter_gf(order: usize) -> Result<UniSeries> {
    Ok(convex_carlitz_perimeter_gf_half(order / 2)?.spread(order))
}

/// Total `B + U` over convex polyominoes by half-perimeter, from its closed
/// form in `(1 - 4x)^{-3}` and `(1 - 4x)^{-5/2}`.
pub fn dq_g1_at_1(order: usize) -> Result<UniSeries> {
    let p = |c: &[i64]| UniSeries::from_ints(order, c);
    let a = p(&[1, -4]);
    let first = &p(&[0, 0, 0, 2, -10, 20, -24, 32]) * &a.inv()?.pow(3);
    let second = &p(&[0, 0, 0, 0, -4, 0, 16]) * &a.sqrt()?.inv()?.pow(5);
    Ok(&first + &second)
}

/// Re-index a series in `t` alone that is even as a dense series in `x = t^2`.
pub fn even_to_uni(s: &MultiSeries) -> Result<UniSeries> {
    let coeffs = s.univariate(Var::T)?;
    UniSeries::from_rationals(coeffs.len() - 1, &coeffs).even_part()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &UniSeries) -> alloc::vec::Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn cc_carlitz_leading_coefficients() {
        let s = cc_carlitz_perimeter_gf(9).unwrap();
        assert_eq!(ints(&s), [0, 0, 1, 1, 1, 5, 14, 46, 154, 506]);
    }

    #[test]
    fn convex_carlitz_leading_coefficients() {
        let s = convex_carlitz_perimeter_gf(10).unwrap();
        assert_eq!(ints(&s), [0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 5]);
        let h = convex_carlitz_perimeter_gf_half(12).unwrap();
        assert_eq!(
            ints(&h),
            [0, 0, 1, 1, 1, 5, 14, 44, 137, 409, 1221, 3601, 10498]
        );
    }

    #[test]
    fn convex_level_sums() {
        let s = dq_g1_at_1(10).unwrap();
        assert_eq!(
            ints(&s),
            [0, 0, 0, 2, 10, 52, 272, 1424, 7368, 37520, 187888]
        );
    }
}
