use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::multi::rational_sqrt;
use super::Rational;

/// Dense univariate series `sum c_k z^k`, `k <= order`, stored as integer
/// numerators over one positive denominator in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniSeries {
    den: BigInt,
    num: Vec<BigInt>,
}

impl UniSeries {
    pub fn zero(order: usize) -> UniSeries {
        UniSeries {
            den: BigInt::one(),
            num: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> UniSeries {
        UniSeries::from_ints(order, &[1])
    }

    /// Polynomial with small integer coefficients, truncated to `order`.
    pub fn from_ints(order: usize, coeffs: &[i64]) -> UniSeries {
        let mut s = UniSeries::zero(order);
        for (k, &c) in coeffs.iter().enumerate().take(order + 1) {
            s.num[k] = BigInt::from(c);
        }
        s
    }

    /// Polynomial given as sparse `(exponent, coefficient)` pairs.
    pub fn from_sparse(order: usize, terms: &[(usize, i64)]) -> UniSeries {
        let mut s = UniSeries::zero(order);
        for &(k, c) in terms {
            if k <= order {
                s.num[k] += c;
            }
        }
        s
    }

    pub fn from_rationals(order: usize, coeffs: &[Rational]) -> UniSeries {
        let den = coeffs
            .iter()
            .take(order + 1)
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num = vec![BigInt::zero(); order + 1];
        for (k, c) in coeffs.iter().enumerate().take(order + 1) {
            num[k] = c.numer() * (&den / c.denom());
        }
        UniSeries::from_parts(den, num)
    }

    fn from_parts(den: BigInt, num: Vec<BigInt>) -> UniSeries {
        let mut s = UniSeries { den, num };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for n in &mut self.num {
                *n = -core::mem::take(n);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if !n.is_zero() {
                g = g.gcd(n);
                if g.is_one() {
                    return;
                }
            }
        }
        self.den /= &g;
        for n in &mut self.num {
            *n /= &g;
        }
    }

    pub fn order(&self) -> usize {
        self.num.len() - 1
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn coeff(&self, k: usize) -> Result<Rational> {
        let n = self.num.get(k).ok_or(Error::OutOfCap)?;
        Ok(Rational::new(n.clone(), self.den.clone()))
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|n| Rational::new(n.clone(), self.den.clone()))
            .collect()
    }

    /// Coefficients as integers, if every coefficient is one.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn truncate(&self, order: usize) -> UniSeries {
        let order = order.min(self.order());
        UniSeries::from_parts(self.den.clone(), self.num[..=order].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn try_add(&self, other: &UniSeries) -> UniSeries {
        self.combine(other, false)
    }

    pub fn try_sub(&self, other: &UniSeries) -> UniSeries {
        self.combine(other, true)
    }

    fn combine(&self, other: &UniSeries, negate: bool) -> UniSeries {
        let order = self.order().min(other.order());
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let num = (0..=order)
            .map(|k| {
                let a = &self.num[k] * &fa;
                let b = &other.num[k] * &fb;
                if negate {
                    a - b
                } else {
                    a + b
                }
            })
            .collect();
        UniSeries::from_parts(den, num)
    }

    fn mul_to(&self, other: &UniSeries, order: usize) -> UniSeries {
        let order = order.min(self.order()).min(other.order());
        let mut num = vec![BigInt::zero(); order + 1];
        for (i, a) in self.num.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    num[i + j] += a * b;
                }
            }
        }
        UniSeries::from_parts(&self.den * &other.den, num)
    }

    pub fn scale(&self, c: &Rational) -> UniSeries {
        let num = self.num.iter().map(|n| n * c.numer()).collect();
        UniSeries::from_parts(&self.den * c.denom(), num)
    }

    pub fn pow(&self, k: u32) -> UniSeries {
        let mut acc = UniSeries::one(self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> UniSeries {
        let order = self.order();
        let mut num = vec![BigInt::zero(); order + 1];
        for i in 0..=order.saturating_sub(k) {
            if i + k <= order {
                num[i + k] = self.num[i].clone();
            }
        }
        UniSeries::from_parts(self.den.clone(), num)
    }

    /// Inverse by precision-doubling Newton steps `r <- r (2 - a r)`.
    pub fn inv(&self) -> Result<UniSeries> {
        if self.num[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order();
        let c0 = Rational::new(self.den.clone(), self.num[0].clone());
        let mut r = UniSeries::from_rationals(0, &[c0]);
        let mut prec = 0;
        let two = UniSeries::from_ints(order, &[2]);
        while prec < order {
            prec = (2 * prec + 1).min(order);
            r = r.extend(prec);
            let a = self.truncate(prec);
            let ar = a.mul_to(&r, prec);
            r = r.mul_to(&two.truncate(prec).try_sub(&ar), prec);
        }
        Ok(r.extend(order))
    }

    fn extend(mut self, order: usize) -> UniSeries {
        self.num.resize(order + 1, BigInt::zero());
        self
    }

    /// Square root with positive constant term, by precision-doubling Newton
    /// steps `s <- (s + a / s) / 2`.
    pub fn sqrt(&self) -> Result<UniSeries> {
        if self.num[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order();
        let c0 = Rational::new(self.num[0].clone(), self.den.clone());
        let root = rational_sqrt(&c0).ok_or(Error::NotARationalSquare)?;
        let mut s = UniSeries::from_rationals(0, &[root]);
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut prec = 0;
        while prec < order {
            prec = (2 * prec + 1).min(order);
            let s_ext = s.extend(prec);
            let a = self.truncate(prec);
            let q = a.mul_to(&s_ext.inv()?, prec);
            s = s_ext.try_add(&q).scale(&half);
        }
        Ok(s.extend(order))
    }

    pub fn is_even(&self) -> bool {
        self.num.iter().skip(1).step_by(2).all(Zero::is_zero)
    }

    /// Re-index a series even in `z` as a series in `z^2`.
    pub fn even_part(&self) -> Result<UniSeries> {
        if !self.is_even() {
            return Err(Error::NotDivisible("odd powers present"));
        }
        let num = self.num.iter().step_by(2).cloned().collect();
        Ok(UniSeries::from_parts(self.den.clone(), num))
    }

    /// Substitute `z -> z^2`.
    pub fn spread(&self, order: usize) -> UniSeries {
        let mut num = vec![BigInt::zero(); order + 1];
        for (k, n) in self.num.iter().enumerate() {
            if 2 * k <= order {
                num[2 * k] = n.clone();
            }
        }
        UniSeries::from_parts(self.den.clone(), num)
    }
}

impl Add<&UniSeries> for &UniSeries {
    type Output = UniSeries;

    fn add(self, rhs: &UniSeries) -> UniSeries {
        self.try_add(rhs)
    }
}

impl Sub<&UniSeries> for &UniSeries {
    type Output = UniSeries;

    fn sub(self, rhs: &UniSeries) -> UniSeries {
        self.try_sub(rhs)
    }
}

impl Mul<&UniSeries> for &UniSeries {
    type Output = UniSeries;

    fn mul(self, rhs: &UniSeries) -> UniSeries {
        self.mul_to(rhs, usize::MAX)
    }
}

impl Neg for &UniSeries {
    type Output = UniSeries;

    fn neg(self) -> UniSeries {
        UniSeries::from_parts(self.den.clone(), self.num.iter().map(|n| -n).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational;

    #[test]
    fn inverse_of_one_minus_z() {
        let s = UniSeries::from_ints(10, &[1, -1]).inv().unwrap();
        assert_eq!(s, UniSeries::from_ints(10, &[1; 11]));
    }

    #[test]
    fn sqrt_matches_binomial_series() {
        // sqrt(1 - 4z) = 1 - 2 sum C_{k-1} z^k
        let s = UniSeries::from_ints(12, &[1, -4]).sqrt().unwrap();
        let catalan = [1i64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786];
        for k in 1..=12 {
            assert_eq!(s.coeff(k).unwrap(), rational(-2 * catalan[k - 1], 1));
        }
        let s = UniSeries::from_ints(6, &[4, 8]).sqrt().unwrap();
        assert_eq!(&s * &s, UniSeries::from_ints(6, &[4, 8]));
    }

    #[test]
    fn even_part_reindexes() {
        let s = UniSeries::from_ints(6, &[1, 0, 2, 0, 3]);
        assert_eq!(s.even_part().unwrap(), UniSeries::from_ints(3, &[1, 2, 3]));
        assert!(UniSeries::from_ints(3, &[0, 1]).even_part().is_err());
        assert_eq!(
            UniSeries::from_ints(3, &[1, 2]).spread(6),
            UniSeries::from_ints(6, &[1, 0, 2])
        );
    }
}
