use crate::error::Result;
use crate::series::{MultiSeries, Var};

use super::{Mutation, Oracle};

/// `K(u) F(u) - RHS` of the functional equation for `F(u)`, with every
/// denominator cleared by `(1 - u)^2 (1 - yu)^2` and `F(u)`, `F(1)` and
/// `dF/du` at `u = 1` all taken from the oracle. Zero up to the bound when
/// the recurrence and the equation agree.
pub fn kernel_residual(bound: u32, mutation: Option<Mutation>) -> Result<MultiSeries> {
    let f = Oracle::new(bound)?
        .with_mutation(mutation)
        .run_f()?
        .series()?;
    let ring = f.truncation().clone();
    let var = |v| MultiSeries::var(&ring, v);
    let (t, y, p, q, u) = (
        var(Var::T)?,
        var(Var::Y)?,
        var(Var::P)?,
        var(Var::Q)?,
        var(Var::U)?,
    );
    let one = MultiSeries::one(&ring);
    let x = &t * &t;
    let no_u = ring.without(Var::U);
    let (f1, df1) = f.dual_derivative_at_one(Var::U)?;
    let (f1, df1) = (f1.restrict(&no_u)?, df1.restrict(&no_u)?);

    let yu = &y * &u;
    let one_u = &one - &u;
    let one_yu = &one - &yu;
    let level = |m: &MultiSeries| {
        &(&(&(&(&(m * &yu) * &(&u - &one)) - &(&yu * &u)) - &(m * &u)) + &yu.scale_int(2))
            + &(m - &one)
    };
    let d = &one_u * &one_yu;
    let kernel = &(&d * &d) - &(&(&level(&q) * &level(&p)) * &x);
    let lhs = &kernel * &f;
    let bracket = &(&(&(&one_u * &one_yu) * &yu.scale_int(2))
        + &(&(&(&p + &q) * &one_u) * &(&one_yu * &one_yu)))
        - &(&one_yu * &one_yu);
    let rhs = &(&(&(&(&x * &y) * &one_u) * &d) + &(&(&x * &bracket) * &f1))
        + &(&(&(&x * &one_u) * &(&one_yu * &one_yu)) * &df1);
    Ok(&lhs - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_vanishes() {
        assert!(kernel_residual(6, None).unwrap().is_zero());
    }

    #[test]
    fn mutated_residual_does_not_vanish() {
        assert!(!kernel_residual(6, Some(Mutation::BottomLevelOffByOne))
            .unwrap()
            .is_zero());
        assert!(!kernel_residual(6, Some(Mutation::GluingWeight))
            .unwrap()
            .is_zero());
    }
}
