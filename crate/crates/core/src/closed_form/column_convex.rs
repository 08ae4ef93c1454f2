//! Column-convex Carlitz polyominoes: the kernel roots and `F(1; x, y, q, q)`.

use crate::error::Result;
use crate::series::{MultiSeries, Truncation, Var};

use super::Vars;

const VARS: [Var; 3] = [Var::T, Var::Y, Var::Q];

/// Working ring: one extra half-perimeter step, consumed by the division by
/// `y` inside the roots.
fn ring(order: u32) -> Result<Truncation> {
    Truncation::half_perimeter(order + 1, &VARS)
}

/// Root of `a0 y u^2 + a1 u + a0 = 0` that is a power series in `y`, for
/// `s = +1` (`u+`) or `s = -1` (`u-`).
fn root(v: &Vars, s: i64) -> Result<MultiSeries> {
    let (t, y, q) = (&v.t, &v.y, &v.q);
    let a0 = &v.int(-s) + &(&(q - &v.int(1)) * t);
    let a1 = &(&(&v.int(s) - &(t * q)) * &(y + &v.int(1))) + &(t * y).scale_int(2);
    let disc = &v.int(1) - &(&(&a0 * &a0) * y).scale_int(4).try_div(&(&a1 * &a1))?;
    let small = (&v.int(1) - &disc.sqrt()?).div_var(Var::Y, 1)?;
    (&(-&a1) * &small).try_div(&a0.scale_int(2))
}

/// `(u+, u-)` as series in `t, y, q`, known to half-perimeter `order`.
pub fn roots(order: u32) -> Result<(MultiSeries, MultiSeries)> {
    let v = Vars::new(&ring(order)?)?;
    let target = Truncation::half_perimeter(order, &VARS)?;
    Ok((
        root(&v, 1)?.restrict(&target)?,
        root(&v, -1)?.restrict(&target)?,
    ))
}

/// Numerator of the kernel of the level-marked functional equation at `p = q`,
/// `(1-u)^2 (1-yu)^2 - x f(u)^2`; it vanishes at both roots.
pub fn kernel_numerator(u: &MultiSeries) -> Result<MultiSeries> {
    let v = Vars::new(u.truncation())?;
    let (t, y, q) = (&v.t, &v.y, &v.q);
    let one = v.int(1);
    let yu = y * u;
    let f = &(&(&(&(&(q * &yu) * &(u - &one)) - &(&yu * u)) - &(q * u)) + &yu.scale_int(2))
        + &(q - &one);
    let a = &(&one - u) * &(&one - &yu);
    Ok(&(&a * &a) - &(&(&f * &f) * &(t * t)))
}

fn f1_from_roots(up: &MultiSeries, um: &MultiSeries, y: &MultiSeries) -> Result<MultiSeries> {
    let one = MultiSeries::one(up.truncation());
    let num = &(&(&(up - &one) * &(um - &one)) * y) * &(y - &one);
    let den = &(&(&(&(up * um) * y) * &(y - &one.scale_int(2))) + &(&(up + um) * y))
        - &(&y.scale_int(2) - &one);
    num.try_div(&den)
}

/// `F(1; x, y, q, q)` in `t, y, q`: column-convex polyominoes by columns,
/// vertical half-perimeter and `q^(B+U)`.
pub fn f1_qq(order: u32) -> Result<MultiSeries> {
    let v = Vars::new(&ring(order)?)?;
    let f = f1_from_roots(&root(&v, 1)?, &root(&v, -1)?, &v.y)?;
    f.restrict(&Truncation::half_perimeter(order, &VARS)?)
}

/// `F(1; x, y, 0, 0)` in `t, y`, built from `v± = u±|_{q=0}`.
pub fn f1_00(order: u32) -> Result<MultiSeries> {
    let v = Vars::new(&ring(order)?)?;
    let zero = MultiSeries::zero(&v.ring.without(Var::Q));
    let vp = root(&v, 1)?.substitute(Var::Q, &zero)?;
    let vm = root(&v, -1)?.substitute(Var::Q, &zero)?;
    let y = v.y.substitute(Var::Q, &zero)?;
    let f = f1_from_roots(&vp, &vm, &y)?;
    f.restrict(&Truncation::half_perimeter(order, &[Var::T, Var::Y])?)
}

/// `d/dq F(1; x, x, q, q)` at `q = 1`, as a series in `t` that is even.
pub fn dq_f1_at_1(order: u32) -> Result<MultiSeries> {
    let (_, d) = f1_qq(order)?.dual_derivative_at_one(Var::Q)?;
    let t = MultiSeries::var(d.truncation(), Var::T)?;
    d.substitute(Var::Y, &(&t * &t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Rational;

    fn c(s: &MultiSeries, e: [u32; 5]) -> Rational {
        s.coefficient(e).unwrap()
    }

    #[test]
    fn kernel_vanishes_at_both_roots() {
        let (up, um) = roots(6).unwrap();
        assert!(kernel_numerator(&up).unwrap().is_zero());
        assert!(kernel_numerator(&um).unwrap().is_zero());
    }

    #[test]
    fn carlitz_slice_leading_terms() {
        let f = f1_00(5).unwrap();
        let int = |k: i64| Rational::from_integer(k.into());
        assert_eq!(c(&f, [2, 1, 0, 0, 0]), int(1));
        assert_eq!(c(&f, [2, 4, 0, 0, 0]), int(1));
        assert_eq!(c(&f, [4, 3, 0, 0, 0]), int(4));
        assert_eq!(c(&f, [4, 2, 0, 0, 0]), int(0));
    }
}
