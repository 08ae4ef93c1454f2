//! Convex polyominoes: the `G^bt -> G^t -> G` chain.

use crate::error::{Error, Result};
use crate::series::{MultiSeries, Truncation, Var};

use super::Vars;

const ALL: [Var; 5] = [Var::T, Var::Y, Var::P, Var::Q, Var::U];
const NO_U: [Var; 4] = [Var::T, Var::Y, Var::P, Var::Q];

fn working(order: u32) -> Result<Vars> {
    Vars::new(&Truncation::half_perimeter(order + 1, &ALL)?)
}

fn target(order: u32, vars: &[Var]) -> Result<Truncation> {
    Truncation::half_perimeter(order, vars)
}

/// How the single-column end terms of `G(1)` are combined.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum EndTerms {
    /// `G^t(1; p, q) + G^t(1; q, p)`: top-anchored plus bottom-anchored.
    #[default]
    Mirrored,
    /// `2 G^t(1; p, q)`, which miscounts from half-perimeter 6 on.
    Doubled,
}

fn gbt(v: &Vars) -> Result<MultiSeries> {
    let (y, p, q, u) = (&v.y, &v.p, &v.q, &v.u);
    let x = v.x();
    let one = v.int(1);
    let inv = (&one - &(y * u)).invert()?;
    let pq = p + q;
    let inner = &(&(-&(y * u)) * &(&pq - &one)) + &pq;
    let den = &(&one - &(&(p * q) * &x)) - &(&(&(&(&x * y) * u) * &inner) * &(&inv * &inv));
    (&(&x * y) * &inv).try_div(&den)
}

/// `G^bt(u; x, y, p, q)`: convex polyominoes whose first column spans all
/// rows, `u` marking first-column height minus one.
pub fn gbt_u(order: u32) -> Result<MultiSeries> {
    gbt(&working(order)?)?.restrict(&target(order, &ALL)?)
}

fn u_prime_in(v: &Vars) -> Result<MultiSeries> {
    let (y, p, q) = (&v.y, &v.p, &v.q);
    let x = v.x();
    let one = v.int(1);
    let e = &one + &(&(p * &(&one - q)) * &x);
    let c = &e * &(&one + &(&(q * &(&one - p)) * &x));
    let d = &(&(&one + y) - &(&(p * q) * &x)) - &(&(&x * y) * &(&(&one - p) * &(&one - q)));
    let disc = &one - &(y * &c).scale_int(4).try_div(&(&d * &d))?;
    let small = (&one - &disc.sqrt()?).div_var(Var::Y, 1)?;
    (&small * &d).try_div(&e.scale_int(2))
}

/// The root `u'` of the kernel of the `G^t` equation, in `t, y, p, q`.
pub fn u_prime(order: u32) -> Result<MultiSeries> {
    let v = working(order)?;
    u_prime_in(&v)?.restrict(&target(order, &NO_U)?)
}

fn kernel(v: &Vars, u: &MultiSeries) -> MultiSeries {
    let (y, p, q) = (&v.y, &v.p, &v.q);
    let x = v.x();
    let one = v.int(1);
    let yu = y * u;
    &(&(&(&(&one - &(&(p * q) * &x)) * &(&(&one - u) * &(&one - &yu)))
        + &(&(q * &x) * &(&one - &yu)))
        - &(&(&(p * &x) * &yu) * &(&one - u)))
        + &(&x * &yu)
}

/// Kernel of the `G^t` equation (cleared of denominators) evaluated at `u'`;
/// the zero series when the root is right.
pub fn kernel_at_u_prime(order: u32) -> Result<MultiSeries> {
    let v = working(order)?;
    let up = u_prime_in(&v)?;
    kernel(&v, &up).restrict(&target(order, &NO_U)?)
}

fn gt1(v: &Vars, up: &MultiSeries) -> Result<MultiSeries> {
    let (y, p, q) = (&v.y, &v.p, &v.q);
    let x = v.x();
    let one = v.int(1);
    let pqx = &(p * q) * &x;
    let yu = y * up;
    let first = (&x * y).try_div(&(&(&(&one - &pqx) * &(&one - &yu)) - &(&(p * &x) * &yu)))?;
    let den = &(&(&(&one - &pqx) * &(&(&one - &yu) * &(&one - &yu)))
        - &(&(&(&x * &yu) * &(p + q)) * &(&one - &yu)))
        - &(&(&x * &yu) * &yu);
    let second = (&(&(&x * y) * &yu) * &(up - &one)).try_div(&den)?;
    Ok(&first + &second)
}

/// `G^t(1; x, y, p, q)`: convex polyominoes whose first column reaches the
/// top row. The first term uses the kernel identity at `u'` so its
/// denominator has constant term 1 even with `q` symbolic.
pub fn gt_1(order: u32) -> Result<MultiSeries> {
    let v = working(order)?;
    let up = u_prime_in(&v)?;
    gt1(&v, &up)?.restrict(&target(order, &NO_U)?)
}

/// `G^t(1)` with the first term as a single quotient
/// `y (u' - 1) / (y u' + q (1 - y u'))`, for a nonzero numeric `q`.
pub fn gt_1_quotient_form(order: u32, q: i64) -> Result<MultiSeries> {
    if q == 0 {
        return Err(Error::ZeroConstantTerm);
    }
    let full = working(order)?;
    let ring = full.ring.without(Var::Q);
    let qc = MultiSeries::integer(&ring, q);
    let up = u_prime_in(&full)?.substitute(Var::Q, &qc)?;
    let v = Vars::new(&ring)?;
    let v = Vars { q: qc.clone(), ..v };
    let one = v.int(1);
    let yu = &v.y * &up;
    let first = (&v.y * &(&up - &one)).try_div(&(&yu + &(&qc * &(&one - &yu))))?;
    let second = gt1(&v, &up)?
        - (&v.x() * &v.y).try_div(
            &(&(&(&one - &(&(&v.p * &qc) * &v.x())) * &(&one - &yu)) - &(&(&v.p * &v.x()) * &yu)),
        )?;
    (&first + &second).restrict(&target(order, &[Var::T, Var::Y, Var::P])?)
}

fn gt(v: &Vars, gbt: &MultiSeries, gt1: &MultiSeries, order: u32) -> Result<MultiSeries> {
    let (y, p, q, u) = (&v.y, &v.p, &v.q, &v.u);
    let x = v.x();
    let one = v.int(1);
    let yu = y * u;
    let one_u = &one - u;
    let one_yu = &one - &yu;
    let d = &one_u * &one_yu;
    let w = &(&(&(&(p * q) * &d) - &(q * &one_yu)) + &(&(p * &yu) * &one_u)) - &yu;
    let inv = one_yu.invert()?;
    let bt_coef = &(&(&(&(&x * &yu) * &yu) * &one_u) * &inv) + &(&(&(q * &x) * &yu) * &one_u);
    let t1_coef = &(&x * &yu) + &(&(q * &x) * &one_yu);
    let r = &(&(&(&x * y) * &one_u) + &(&bt_coef * gbt)) + &(&t1_coef * gt1);
    let xw = &x * &w;
    let mut g = MultiSeries::zero(r.truncation());
    // Each pass fixes two more powers of t; projecting keeps every division
    // by 1 - u exact.
    for k in 0..=order {
        let next = &(&(&r + &(&xw * &g)) * &inv).project(Var::T, 2 * k + 2);
        g = next.div_one_minus(Var::U)?.retruncate(g.truncation());
    }
    let residual = &(&(&d - &xw) * &g) - &r;
    if !residual.restrict(&target(order, &ALL)?)?.is_zero() {
        return Err(Error::KernelRemainder);
    }
    Ok(g)
}

/// `G^t(u; x, y, p, q)`, the solution of the `G^t` functional equation.
pub fn gt_u(order: u32) -> Result<MultiSeries> {
    let v = working(order)?;
    let b = gbt(&v)?;
    let g1 = gt1(&v, &u_prime_in(&v)?)?;
    gt(&v, &b, &g1, order)?.restrict(&target(order, &ALL)?)
}

/// The roots `u±` of the kernel of the `G` equation, in `t, p, q`.
pub fn kernel_roots(order: u32) -> Result<(MultiSeries, MultiSeries)> {
    let v = Vars::new(&target(order, &[Var::T, Var::P, Var::Q])?)?;
    let (up, um, _, _) = roots_in(&v)?;
    Ok((up, um))
}

/// `(u+, u-, r, S)` with `r = 1 - pqx` and `S = sqrt(4 + (p - q)^2 x)`,
/// so that `u± = 1 + ((p + q) x ± t S) / (2 r)`.
fn roots_in(v: &Vars) -> Result<(MultiSeries, MultiSeries, MultiSeries, MultiSeries)> {
    let (t, p, q) = (&v.t, &v.p, &v.q);
    let x = v.x();
    let one = v.int(1);
    let pmq = p - q;
    let s = (&v.int(4) + &(&(&pmq * &pmq) * &x)).sqrt()?;
    let r = &one - &(&(p * q) * &x);
    let inv2r = r.scale_int(2).invert()?;
    let base = &(p + q) * &x;
    let ts = t * &s;
    let up = &one + &(&(&base + &ts) * &inv2r);
    let um = &one + &(&(&base - &ts) * &inv2r);
    Ok((up, um, r, s))
}

/// `G(1; x, y, p, q)`: all convex polyominoes.
pub fn g1_full(order: u32, ends: EndTerms) -> Result<MultiSeries> {
    let v = working(order)?;
    let b = gbt(&v)?;
    let g1t = gt1(&v, &u_prime_in(&v)?)?;
    let gtu = gt(&v, &b, &g1t, order)?;
    let gtu_pq = gtu.swap_vars(Var::P, Var::Q);

    let ring = v.ring.without(Var::U);
    let w = Vars::new(&ring)?;
    let (up, um, _, _) = roots_in(&w)?;
    let (y, p, q) = (&w.y, &w.p, &w.q);
    let one = w.int(1);

    let prod = &(&one - &up) * &(&one - &um);
    // (1 - u+)(1 - u-) / (u+ - u-): both factors carry one power of t.
    let pd = prod
        .div_var(Var::T, 1)?
        .try_div(&(&up - &um).div_var(Var::T, 1)?)?;
    let ayp = (&one - &(y * &up)).invert()?;
    let aym = (&one - &(y * &um)).invert()?;
    let at = |s: &MultiSeries, root: &MultiSeries| s.substitute(Var::U, root);

    let t1 = &(&(&(y * &(y - &one)) * &prod) * &ayp) * &aym;
    let bt_term = |root: &MultiSeries, inv: &MultiSeries| -> Result<MultiSeries> {
        Ok(&(&(&(root * root) * &(&one - root)) * &at(&b, root)?) * &(inv * inv))
    };
    let t2 = &(&(y * y) * &pd) * &(&bt_term(&up, &ayp)? - &bt_term(&um, &aym)?);
    let side = |root: &MultiSeries, inv: &MultiSeries| -> Result<MultiSeries> {
        let one_r = &one - root;
        let mix = &(&(&one - &(p * &one_r)) * &at(&gtu, root)?)
            + &(&(&one - &(q * &one_r)) * &at(&gtu_pq, root)?);
        Ok(&(&(&(y * root) * &pd) * inv) * &mix)
    };
    let t3 = -side(&up, &ayp)?;
    let t4 = side(&um, &aym)?;
    let ends = match ends {
        EndTerms::Mirrored => &g1t + &g1t.swap_vars(Var::P, Var::Q),
        EndTerms::Doubled => g1t.scale_int(2),
    };
    let t5 = &(&(&(y * &prod) * &ayp) * &aym) * &ends;
    let g = &(&(&(&t1 + &t2) + &t3) + &t4) + &t5;
    g.restrict(&target(order, &NO_U)?)
}

/// The closed form of `G(1; x, x, q, q)` with its degree-8 polynomial `A`,
/// in `t, q`.
pub fn g1_xx_qq(order: u32) -> Result<MultiSeries> {
    let ring = target(order, &[Var::T, Var::Q])?;
    let v = Vars::new(&ring)?;
    let q = &v.q;
    let x = v.x();
    let one = v.int(1);
    let qp = |k: u32| q.pow(k);
    let xp = |k: u32| x.pow(k);
    let qm1 = q - &one;
    let poly = |c: &[i64]| {
        c.iter()
            .enumerate()
            .fold(MultiSeries::zero(&ring), |acc, (i, &k)| {
                &acc + &qp(i as u32).scale_int(k)
            })
    };
    let q2p1 = poly(&[1, 0, 1]);
    let b3 = poly(&[-2, 10, 0, 3]) * q.clone();
    let c4 = poly(&[-4, -6, 11, 0, 1]);
    let a = &(&(&(&(&(&(&(&one - &(&q2p1.scale_int(3) * &x)) + &(&b3 * &xp(2)))
        - &(&(&q2p1 * &c4) * &xp(3)))
        + &(&(&qm1 * &poly(&[-3, -5, -7, 17, 0, 6])) * &xp(4)))
        - &(&(&(&q2p1 * &c4) * &qm1.pow(2)) * &xp(5)))
        + &(&(&b3 * &qm1.pow(4)) * &xp(6)))
        - &(&(&q2p1.scale_int(3) * &qm1.pow(6)) * &xp(7)))
        + &(&qm1.pow(8) * &xp(8));
    let q2 = qp(2);
    let common = &(&(&(&q2 * &xp(2)) - &(&q2 * &x)) - (&(q * &xp(2)).scale_int(2))) + &xp(2);
    let d1 = &(&common - &x.scale_int(3)) + &one;
    let d2 = &(&common + &x) + &one;
    let s = &d1 * &d2;
    let q3 = qp(3);
    let m = &(&(&(&(&(&(&(&(&(&q3 * &xp(2)) - &(&q3 * &x)) - (&(&q2 * &xp(2)).scale_int(3)))
        + &(&q2 * &x))
        + (&(q * &xp(2)).scale_int(3)))
        - &(q * &x))
        - &xp(2))
        + q)
        + &x)
        + &one;
    let first = (&xp(2) * &a).try_div(&(&s * &s))?;
    let second = (&(&xp(4) * &m) * &m).try_div(&(&(&s * &s) * &s).sqrt()?)?;
    Ok(&first - &second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Rational;

    fn int(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    #[test]
    fn kernel_vanishes_at_u_prime() {
        assert!(kernel_at_u_prime(5).unwrap().is_zero());
    }

    #[test]
    fn gbt_single_column_slice() {
        let g = gbt_u(5).unwrap();
        // u^0 slice is x y / (1 - pqx)
        assert_eq!(g.coefficient([2, 1, 0, 0, 0]).unwrap(), int(1));
        assert_eq!(g.coefficient([4, 1, 1, 1, 0]).unwrap(), int(1));
        assert_eq!(g.coefficient([6, 1, 2, 2, 0]).unwrap(), int(1));
        assert_eq!(g.coefficient([4, 1, 0, 0, 0]).unwrap(), int(0));
        // two columns, two rows, first column of one cell: impossible
        assert_eq!(g.coefficient([4, 2, 0, 0, 0]).unwrap(), int(0));
    }

    #[test]
    fn diagonal_leading_terms() {
        let g = g1_xx_qq(5).unwrap();
        let c = |n: u32, k: u32| g.coefficient([2 * n, 0, 0, k, 0]).unwrap();
        assert_eq!((c(2, 0), c(2, 1)), (int(1), int(0)));
        assert_eq!((c(3, 0), c(3, 1), c(3, 2)), (int(1), int(0), int(1)));
        assert_eq!(
            (c(4, 0), c(4, 1), c(4, 2), c(4, 4)),
            (int(1), int(4), int(1), int(1))
        );
        // (q^2 + 1)(q^4 + 8q + 5) = q^6 + q^4 + 8q^3 + 5q^2 + 8q + 5
        let expect = [5, 8, 5, 8, 1, 0, 1];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(c(5, k as u32), int(e));
        }
    }
}
