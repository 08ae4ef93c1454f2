use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

use super::mono::{Mono, Var, MAX_EXPONENT};
use super::trunc::Truncation;
use super::Rational;

/// Newton iterations never need more than `log2` of the largest total degree.
const MAX_NEWTON_STEPS: usize = 64;

/// Truncated multivariate power series with rational coefficients.
///
/// Coefficients are stored as integer numerators over one positive common
/// denominator, kept in lowest terms, so two equal series compare equal
/// structurally. Every stored monomial is admitted by the truncation and
/// every stored numerator is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiSeries {
    trunc: Truncation,
    den: BigInt,
    terms: BTreeMap<Mono, BigInt>,
}

/// How [`MultiSeries::dual_derivative_at_one`] obtains the derivative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualPath {
    /// Differentiate the truncated polynomial, then evaluate at 1.
    Polynomial,
    /// Shift `v -> 1 + v` in a ring where `v^2 = 0`, i.e. arithmetic on
    /// value/derivative pairs.
    Pairs,
}

impl MultiSeries {
    pub fn zero(trunc: &Truncation) -> MultiSeries {
        MultiSeries {
            trunc: trunc.clone(),
            den: BigInt::one(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: &Truncation) -> MultiSeries {
        MultiSeries::integer(trunc, 1)
    }

    pub fn integer(trunc: &Truncation, c: i64) -> MultiSeries {
        MultiSeries::constant(trunc, &Rational::from_integer(BigInt::from(c)))
    }

    pub fn constant(trunc: &Truncation, c: &Rational) -> MultiSeries {
        MultiSeries::monomial(trunc, Mono::ONE, c)
    }

    pub fn monomial(trunc: &Truncation, m: Mono, c: &Rational) -> MultiSeries {
        let mut s = MultiSeries::zero(trunc);
        if !c.is_zero() && trunc.admits(m) {
            s.den = c.denom().clone();
            s.terms.insert(m, c.numer().clone());
        }
        s
    }

    pub fn var(trunc: &Truncation, v: Var) -> Result<MultiSeries> {
        if !trunc.is_active(v) {
            return Err(Error::UnknownVariable(v));
        }
        Ok(MultiSeries::monomial(
            trunc,
            Mono::var(v, 1),
            &Rational::one(),
        ))
    }

    /// Build from `(monomial, coefficient)` pairs; repeated monomials add up.
    pub fn from_terms<I>(trunc: &Truncation, terms: I) -> MultiSeries
    where
        I: IntoIterator<Item = (Mono, Rational)>,
    {
        let terms: Vec<(Mono, Rational)> = terms
            .into_iter()
            .filter(|(m, c)| trunc.admits(*m) && !c.is_zero())
            .collect();
        let den = terms
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut map: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            let n = c.numer() * (&den / c.denom());
            *map.entry(m).or_default() += n;
        }
        let mut s = MultiSeries {
            trunc: trunc.clone(),
            den,
            terms: map,
        };
        s.normalize();
        s
    }

    fn from_parts(trunc: Truncation, den: BigInt, terms: BTreeMap<Mono, BigInt>) -> MultiSeries {
        let mut s = MultiSeries { trunc, den, terms };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let trunc = &self.trunc;
        self.terms.retain(|m, n| !n.is_zero() && trunc.admits(*m));
        if self.terms.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for n in self.terms.values_mut() {
                *n = -core::mem::take(n);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for n in self.terms.values() {
            g = g.gcd(n);
            if g.is_one() {
                return;
            }
        }
        self.den /= &g;
        for n in self.terms.values_mut() {
            *n /= &g;
        }
    }

    pub fn truncation(&self) -> &Truncation {
        &self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common denominator of all coefficients.
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mono, Rational)> + '_ {
        self.terms
            .iter()
            .map(move |(m, n)| (*m, Rational::new(n.clone(), self.den.clone())))
    }

    fn coeff_unchecked(&self, m: Mono) -> Rational {
        match self.terms.get(&m) {
            Some(n) => Rational::new(n.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff_unchecked(Mono::ONE)
    }

    /// Exact coefficient of `t^e0 y^e1 p^e2 q^e3 u^e4`. A query outside the
    /// caps is an error: it means the truncation order was too low, not that
    /// the coefficient is zero.
    pub fn coefficient(&self, exps: [u32; 5]) -> Result<Rational> {
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::OutOfCap);
        }
        let m = Mono::new(exps);
        if !self.trunc.admits(m) {
            return Err(Error::OutOfCap);
        }
        Ok(self.coeff_unchecked(m))
    }

    pub fn coefficient_of(&self, m: Mono) -> Result<Rational> {
        self.coefficient(m.exps())
    }

    pub fn max_exp(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn min_weighted_degree(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|&m| self.trunc.weighted_degree(m))
            .min()
    }

    pub fn is_even_in(&self, v: Var) -> bool {
        self.terms.keys().all(|m| m.exp(v) % 2 == 0)
    }

    /// Re-truncate into the meet of the current ring and `trunc`.
    pub fn restrict(&self, trunc: &Truncation) -> Result<MultiSeries> {
        let t = self.trunc.meet(trunc)?;
        Ok(MultiSeries::from_parts(
            t,
            self.den.clone(),
            self.terms.clone(),
        ))
    }

    /// Keep only terms with `v`-degree at most `max`.
    pub fn truncate_var(&self, v: Var, max: u32) -> MultiSeries {
        let t = self.trunc.with_cap(v, max.min(self.trunc.cap(v)));
        MultiSeries::from_parts(t, self.den.clone(), self.terms.clone())
    }

    /// Drop terms with `v`-degree above `max` but keep the ring, so the
    /// result claims zeros it does not know. Only for iterations that refill
    /// the dropped range.
    pub(crate) fn project(&self, v: Var, max: u32) -> MultiSeries {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) <= max)
            .map(|(m, n)| (*m, n.clone()))
            .collect();
        MultiSeries::from_parts(self.trunc.clone(), self.den.clone(), terms)
    }

    /// Replace the truncation outright, dropping terms it does not admit.
    /// For polynomial variables whose degree is known not to reach the cap.
    pub(crate) fn retruncate(&self, trunc: &Truncation) -> MultiSeries {
        MultiSeries::from_parts(trunc.clone(), self.den.clone(), self.terms.clone())
    }

    /// Coefficients of a series in `v` alone, `v^0 ..= v^cap`.
    pub fn univariate(&self, v: Var) -> Result<Vec<Rational>> {
        if self.terms.keys().any(|m| m.with(v, 0) != Mono::ONE) {
            return Err(Error::NotUnivariate(v));
        }
        let mut cap = self.trunc.cap(v);
        if let Some(total) = self.trunc.total() {
            if self.trunc.weight(v) > 0 {
                cap = cap.min(total / self.trunc.weight(v));
            }
        }
        Ok((0..=cap)
            .map(|k| self.coeff_unchecked(Mono::var(v, k)))
            .collect())
    }

    /// Coefficient series of `v^k`, with `v` removed from the ring.
    pub fn slice(&self, v: Var, k: u32) -> MultiSeries {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) == k)
            .map(|(m, n)| (m.with(v, 0), n.clone()))
            .collect();
        MultiSeries::from_parts(self.trunc.without(v), self.den.clone(), terms)
    }

    /// Compare two series on the monomials both of them know.
    pub fn eq_truncated(&self, other: &MultiSeries) -> Result<bool> {
        let t = self.trunc.meet(&other.trunc)?;
        Ok(self.restrict(&t)? == other.restrict(&t)?)
    }

    pub fn try_add(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.combine(other, false)
    }

    pub fn try_sub(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.combine(other, true)
    }

    fn combine(&self, other: &MultiSeries, negate: bool) -> Result<MultiSeries> {
        let trunc = self.trunc.meet(&other.trunc)?;
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let mut terms = BTreeMap::new();
        for (m, n) in &self.terms {
            if trunc.admits(*m) {
                terms.insert(*m, n * &fa);
            }
        }
        for (m, n) in &other.terms {
            if trunc.admits(*m) {
                let v = n * &fb;
                let e = terms.entry(*m).or_insert_with(BigInt::zero);
                if negate {
                    *e -= v;
                } else {
                    *e += v;
                }
            }
        }
        Ok(MultiSeries::from_parts(trunc, den, terms))
    }

    pub fn try_mul(&self, other: &MultiSeries) -> Result<MultiSeries> {
        let trunc = self.trunc.meet(&other.trunc)?;
        let total = trunc.total().unwrap_or(u32::MAX);
        let mut rhs: Vec<(u32, Mono, &BigInt)> = other
            .terms
            .iter()
            .filter(|(m, _)| trunc.admits(**m))
            .map(|(m, n)| (trunc.weighted_degree(*m), *m, n))
            .collect();
        rhs.sort_by_key(|e| e.0);
        let mut acc: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (ma, na) in &self.terms {
            if !trunc.admits(*ma) {
                continue;
            }
            let wa = trunc.weighted_degree(*ma);
            for &(wb, mb, nb) in &rhs {
                if wa + wb > total {
                    break;
                }
                let m = ma.mul(mb);
                if !trunc.fits_caps(m) {
                    continue;
                }
                *acc.entry(m).or_default() += na * nb;
            }
        }
        Ok(MultiSeries::from_parts(trunc, &self.den * &other.den, acc))
    }

    pub fn scale(&self, c: &Rational) -> MultiSeries {
        let terms = self
            .terms
            .iter()
            .map(|(m, n)| (*m, n * c.numer()))
            .collect();
        MultiSeries::from_parts(self.trunc.clone(), &self.den * c.denom(), terms)
    }

    pub fn scale_int(&self, c: i64) -> MultiSeries {
        self.scale(&Rational::from_integer(BigInt::from(c)))
    }

    pub fn pow(&self, k: u32) -> MultiSeries {
        let mut acc = MultiSeries::one(&self.trunc);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse by Newton iteration `r <- r + r (1 - a r)`;
    /// the error squares at every step.
    pub fn invert(&self) -> Result<MultiSeries> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let one = MultiSeries::one(&self.trunc);
        let mut r = MultiSeries::constant(&self.trunc, &c0.recip());
        for _ in 0..MAX_NEWTON_STEPS {
            let err = &one - &(self * &r);
            if err.is_zero() {
                return Ok(r);
            }
            r = &r + &(&r * &err);
        }
        Err(Error::NoConvergence)
    }

    pub fn try_div(&self, other: &MultiSeries) -> Result<MultiSeries> {
        self.try_mul(&other.invert()?)
    }

    /// Square root with positive constant term.
    ///
    /// The constant term must be the square of a nonzero rational; the input
    /// is normalized to constant term 1 and refined by Newton steps
    /// `s <- s + (b - s^2) / (2 s)`, each of which doubles the order of
    /// agreement.
    pub fn sqrt(&self) -> Result<MultiSeries> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let root = rational_sqrt(&c0).ok_or(Error::NotARationalSquare)?;
        let b = self.scale(&c0.recip());
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        let mut s = MultiSeries::one(&self.trunc);
        for _ in 0..MAX_NEWTON_STEPS {
            let err = &b - &(&s * &s);
            if err.is_zero() {
                return Ok(s.scale(&root));
            }
            s = &s + &(&err * &s.invert()?).scale(&half);
        }
        Err(Error::NoConvergence)
    }

    /// Formal partial derivative. The cap of `v` drops by one and the total
    /// cap by the weight of `v`.
    pub fn derive(&self, v: Var) -> Result<MultiSeries> {
        if !self.trunc.is_active(v) {
            return Err(Error::UnknownVariable(v));
        }
        let trunc = self
            .trunc
            .with_cap(v, self.trunc.cap(v) - 1)
            .lower_total(self.trunc.weight(v));
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, n)| (m.with(v, m.exp(v) - 1), n * BigInt::from(m.exp(v))))
            .collect();
        Ok(MultiSeries::from_parts(trunc, self.den.clone(), terms))
    }

    /// Replace `v` by the series `s`.
    ///
    /// For a graded variable (positive weight) `s` must have zero constant
    /// term and positive order; the result's total cap is lowered when `s`
    /// has smaller weighted order than `v`, so no reported coefficient can
    /// depend on dropped terms. A polynomial variable (weight 0) may be set
    /// to anything, including constants such as `q = 1` or `u = 1 + w`.
    pub fn substitute(&self, v: Var, s: &MultiSeries) -> Result<MultiSeries> {
        if !self.trunc.is_active(v) {
            return Err(Error::UnknownVariable(v));
        }
        let base = self
            .trunc
            .with_cap(v, s.trunc.cap(v))
            .with_weight(v, s.trunc.weight(v));
        let mut trunc = base.meet(&s.trunc)?;
        let w = self.trunc.weight(v);
        if w > 0 && !s.is_zero() {
            if !s.constant_term().is_zero() {
                return Err(Error::InfiniteComposition);
            }
            let order = s
                .terms
                .keys()
                .map(|&m| trunc.weighted_degree(m))
                .min()
                .unwrap_or(0);
            if order == 0 {
                return Err(Error::InfiniteComposition);
            }
            // A dropped term v^k with k > cap(v), or of weighted degree above
            // the total, lands at weighted degree >= the bounds below.
            let mut bound = (self.trunc.cap(v) + 1) * order - 1;
            if let Some(total) = self.trunc.total() {
                bound = bound.min((order * (total + 1)).div_ceil(w) - 1);
            }
            let new_total = trunc.total().map_or(bound, |t| t.min(bound));
            trunc = trunc.with_total_cap(Some(new_total));
        }
        let mut slices: BTreeMap<u32, BTreeMap<Mono, BigInt>> = BTreeMap::new();
        for (m, n) in &self.terms {
            slices
                .entry(m.exp(v))
                .or_default()
                .insert(m.with(v, 0), n.clone());
        }
        let s = s.restrict(&trunc)?;
        let mut acc = MultiSeries::zero(&trunc);
        let top = match slices.keys().next_back() {
            Some(&k) => k,
            None => return Ok(acc),
        };
        for k in (0..=top).rev() {
            acc = &acc * &s;
            if let Some(terms) = slices.remove(&k) {
                let slice = MultiSeries::from_parts(trunc.clone(), self.den.clone(), terms);
                acc = &acc + &slice;
            }
        }
        Ok(acc)
    }

    /// Value and first derivative with respect to `v` at `v = 1`, computed by
    /// both routes; disagreement is reported as an error.
    pub fn dual_derivative_at_one(&self, v: Var) -> Result<(MultiSeries, MultiSeries)> {
        let a = self.dual_derivative_at_one_via(v, DualPath::Polynomial)?;
        let b = self.dual_derivative_at_one_via(v, DualPath::Pairs)?;
        if a != b {
            return Err(Error::PathMismatch);
        }
        Ok(a)
    }

    pub fn dual_derivative_at_one_via(
        &self,
        v: Var,
        path: DualPath,
    ) -> Result<(MultiSeries, MultiSeries)> {
        if !self.trunc.is_active(v) {
            return Err(Error::UnknownVariable(v));
        }
        match path {
            DualPath::Polynomial => {
                let one = MultiSeries::one(&self.trunc.without(v));
                let value = self.substitute(v, &one)?;
                let deriv = self.derive(v)?.substitute(v, &one)?;
                Ok((value, deriv))
            }
            DualPath::Pairs => {
                let ring = self.trunc.with_cap(v, 1);
                let shift = &MultiSeries::one(&ring) + &MultiSeries::var(&ring, v)?;
                let shifted = self.substitute(v, &shift)?;
                Ok((shifted.slice(v, 0), shifted.slice(v, 1)))
            }
        }
    }

    /// Exact division by the monomial `m`; every term must be divisible.
    pub fn div_mono(&self, m: Mono) -> Result<MultiSeries> {
        let mut trunc = self.trunc.lower_total(self.trunc.weighted_degree(m));
        for v in Var::ALL {
            let e = m.exp(v);
            if e > 0 {
                if e > self.trunc.cap(v) {
                    return Err(Error::NotDivisible("monomial"));
                }
                trunc = trunc.with_cap(v, self.trunc.cap(v) - e);
            }
        }
        let mut terms = BTreeMap::new();
        for (k, n) in &self.terms {
            if Var::ALL.iter().any(|&v| k.exp(v) < m.exp(v)) {
                return Err(Error::NotDivisible("monomial"));
            }
            terms.insert(Mono(k.0 - m.0), n.clone());
        }
        Ok(MultiSeries::from_parts(trunc, self.den.clone(), terms))
    }

    pub fn div_var(&self, v: Var, k: u32) -> Result<MultiSeries> {
        self.div_mono(Mono::var(v, k))
    }

    /// If the series is a single monomial with coefficient 1, return it.
    pub fn as_unit_monomial(&self) -> Option<Mono> {
        if self.terms.len() == 1 && self.den.is_one() {
            let (m, n) = self.terms.iter().next()?;
            if n.is_one() {
                return Some(*m);
            }
        }
        None
    }

    /// Exact division by `1 - v` for a polynomial variable `v`: the slice
    /// polynomial in `v` at every other monomial must vanish at `v = 1`.
    pub fn div_one_minus(&self, v: Var) -> Result<MultiSeries> {
        if !self.trunc.is_active(v) {
            return Err(Error::UnknownVariable(v));
        }
        let mut groups: BTreeMap<Mono, BTreeMap<u32, &BigInt>> = BTreeMap::new();
        for (m, n) in &self.terms {
            groups.entry(m.with(v, 0)).or_default().insert(m.exp(v), n);
        }
        let mut terms = BTreeMap::new();
        for (rest, poly) in groups {
            let top = *poly.keys().next_back().unwrap_or(&0);
            let mut acc = BigInt::zero();
            for j in 0..=top {
                if let Some(c) = poly.get(&j) {
                    acc += *c;
                }
                if j < top && !acc.is_zero() {
                    terms.insert(rest.with(v, j), acc.clone());
                }
            }
            if !acc.is_zero() {
                return Err(Error::NotDivisible("1 - var"));
            }
        }
        let trunc = self.trunc.with_cap(v, self.trunc.cap(v).saturating_sub(1));
        Ok(MultiSeries::from_parts(trunc, self.den.clone(), terms))
    }

    /// Exchange the roles of two variables.
    pub fn swap_vars(&self, a: Var, b: Var) -> MultiSeries {
        let terms = self
            .terms
            .iter()
            .map(|(m, n)| (m.with(a, m.exp(b)).with(b, m.exp(a)), n.clone()))
            .collect();
        MultiSeries::from_parts(self.trunc.swap(a, b), self.den.clone(), terms)
    }
}

pub(crate) fn rational_sqrt(c: &Rational) -> Option<Rational> {
    if c.is_negative() {
        return None;
    }
    let n = c.numer().sqrt();
    let d = c.denom().sqrt();
    if &(&n * &n) == c.numer() && &(&d * &d) == c.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&MultiSeries> for &MultiSeries {
            type Output = MultiSeries;

            /// Panics when the operands' truncations are incompatible; use the
            /// `try_` method to handle that case.
            fn $method(self, rhs: &MultiSeries) -> MultiSeries {
                self.$inner(rhs).expect("incompatible series truncations")
            }
        }

        impl $trait<MultiSeries> for MultiSeries {
            type Output = MultiSeries;

            fn $method(self, rhs: MultiSeries) -> MultiSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &MultiSeries {
    type Output = MultiSeries;

    fn neg(self) -> MultiSeries {
        let terms = self.terms.iter().map(|(m, n)| (*m, -n)).collect();
        MultiSeries::from_parts(self.trunc.clone(), self.den.clone(), terms)
    }
}

impl Neg for MultiSeries {
    type Output = MultiSeries;

    fn neg(self) -> MultiSeries {
        -&self
    }
}

impl fmt::Display for MultiSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m == Mono::ONE {
                write!(f, "{}", c)?;
            } else if c.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "({})*{}", c, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational;

    fn ring_t(order: u32) -> Truncation {
        Truncation::constants()
            .with_var(Var::T, 1, order)
            .unwrap()
            .with_total(order)
    }

    fn poly_t(tr: &Truncation, coeffs: &[i64]) -> MultiSeries {
        MultiSeries::from_terms(
            tr,
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (Mono::var(Var::T, i as u32), rational(c, 1))),
        )
    }

    fn t_coeffs(s: &MultiSeries, n: u32) -> Vec<Rational> {
        (0..=n)
            .map(|i| s.coefficient([i, 0, 0, 0, 0]).unwrap())
            .collect()
    }

    #[test]
    fn ring_operation_examples() {
        let tr = ring_t(4);
        let a = poly_t(&tr, &[1, 1]);
        let b = poly_t(&tr, &[1, -1]);
        assert_eq!(&a * &b, poly_t(&tr, &[1, 0, -1]));
        assert_eq!(
            &poly_t(&tr, &[1, 1, 1]) + &poly_t(&tr, &[-1, 1]),
            poly_t(&tr, &[0, 2, 1])
        );
        let c = poly_t(&tr, &[1, 2]);
        assert_eq!(&c * &c, poly_t(&tr, &[1, 4, 4]));
    }

    #[test]
    fn invert_examples() {
        let tr = ring_t(5);
        let geo = poly_t(&tr, &[1, -1]).invert().unwrap();
        assert_eq!(geo, poly_t(&tr, &[1, 1, 1, 1, 1, 1]));
        let half = MultiSeries::integer(&tr, 2).invert().unwrap();
        assert_eq!(half.constant_term(), rational(1, 2));
        assert_eq!(
            MultiSeries::zero(&tr).invert(),
            Err(Error::ZeroConstantTerm)
        );

        let tr2 = Truncation::constants()
            .with_var(Var::Y, 1, 4)
            .unwrap()
            .with_var(Var::U, 0, 4)
            .unwrap()
            .with_total(4);
        let yu = MultiSeries::monomial(&tr2, Mono::new([0, 1, 0, 0, 1]), &rational(1, 1));
        let inv = (&MultiSeries::one(&tr2) - &yu).invert().unwrap();
        for k in 0..=4 {
            assert_eq!(inv.coefficient([0, k, 0, 0, k]).unwrap(), rational(1, 1));
        }
        assert_eq!(inv.len(), 5);
    }

    #[test]
    fn sqrt_examples() {
        let tr = ring_t(4);
        assert_eq!(MultiSeries::one(&tr).sqrt().unwrap(), MultiSeries::one(&tr));
        // sqrt(1 + 4t) = 1 + 2t - 2t^2 + 4t^3 - 10t^4
        let s = poly_t(&tr, &[1, 4]).sqrt().unwrap();
        assert_eq!(t_coeffs(&s, 4), [1, 2, -2, 4, -10].map(|c| rational(c, 1)));
        // sqrt(4 + 8t) = 2 sqrt(1 + 2t) = 2 + 2t - t^2 + t^3 - (5/4) t^4
        let s = poly_t(&tr, &[4, 8]).sqrt().unwrap();
        assert_eq!(&s * &s, poly_t(&tr, &[4, 8]));
        assert_eq!(
            t_coeffs(&s, 4),
            [
                rational(2, 1),
                rational(2, 1),
                rational(-1, 1),
                rational(1, 1),
                rational(-5, 4)
            ]
        );
        assert_eq!(poly_t(&tr, &[2, 1]).sqrt(), Err(Error::NotARationalSquare));
        assert_eq!(poly_t(&tr, &[0, 0, 1]).sqrt(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn derive_examples() {
        let tr = Truncation::half_perimeter(6, &[Var::T, Var::Y, Var::Q, Var::U]).unwrap();
        let u2y = MultiSeries::monomial(&tr, Mono::new([0, 1, 0, 0, 2]), &rational(1, 1));
        let d = u2y.derive(Var::U).unwrap();
        assert_eq!(d.coefficient([0, 1, 0, 0, 1]).unwrap(), rational(2, 1));
        assert_eq!(d.len(), 1);
        let q4t3 = MultiSeries::monomial(&tr, Mono::new([3, 0, 0, 4, 0]), &rational(1, 1));
        let d = q4t3.derive(Var::Q).unwrap();
        assert_eq!(d.coefficient([3, 0, 0, 3, 0]).unwrap(), rational(4, 1));
        assert!(MultiSeries::integer(&tr, 7)
            .derive(Var::T)
            .unwrap()
            .is_zero());
        assert_eq!(
            MultiSeries::one(&tr).derive(Var::P),
            Err(Error::UnknownVariable(Var::P))
        );
        // derivative of a graded variable lowers the total cap by its weight
        assert_eq!(q4t3.derive(Var::T).unwrap().truncation().total(), Some(11));
    }

    #[test]
    fn substitute_examples() {
        let tr = Truncation::half_perimeter(4, &[Var::T, Var::Y, Var::Q]).unwrap();
        let t = MultiSeries::var(&tr, Var::T).unwrap();
        let y = MultiSeries::var(&tr, Var::Y).unwrap();
        let q = MultiSeries::var(&tr, Var::Q).unwrap();
        // y := t in t*y + y^2 gives t^2 + t^2 = 2 t^2
        let a = &(&t * &y) + &(&y * &y);
        let b = a.substitute(Var::Y, &t).unwrap();
        assert_eq!(b.coefficient([2, 0, 0, 0, 0]).unwrap(), rational(2, 1));
        // q := 0 in q^2 + 4q + 1
        let poly = &(&(&q * &q) + &q.scale_int(4)) + &MultiSeries::one(&tr);
        let zero = MultiSeries::zero(&tr.without(Var::Q));
        assert_eq!(
            poly.substitute(Var::Q, &zero).unwrap(),
            MultiSeries::one(&tr.without(Var::Q))
        );
        let one = MultiSeries::one(&tr.without(Var::Q));
        assert_eq!(
            poly.substitute(Var::Q, &one).unwrap().constant_term(),
            rational(6, 1)
        );
        // graded variable set to a nonzero constant is rejected
        assert_eq!(
            t.substitute(Var::T, &MultiSeries::one(&tr)),
            Err(Error::InfiniteComposition)
        );
    }

    #[test]
    fn substitution_lowers_total_when_order_drops() {
        // y has weight 2; y := t has weighted order 1, so a series known to
        // total 8 is only known to total 4 afterwards.
        let tr = Truncation::half_perimeter(4, &[Var::T, Var::Y]).unwrap();
        let t = MultiSeries::var(&tr, Var::T).unwrap();
        let y = MultiSeries::var(&tr, Var::Y).unwrap();
        let inv = (&MultiSeries::one(&tr) - &y).invert().unwrap();
        let b = inv.substitute(Var::Y, &t).unwrap();
        assert_eq!(b.truncation().total(), Some(4));
        for k in 0..=4 {
            assert_eq!(b.coefficient([k, 0, 0, 0, 0]).unwrap(), rational(1, 1));
        }
        assert_eq!(b.coefficient([5, 0, 0, 0, 0]), Err(Error::OutOfCap));
    }

    #[test]
    fn coefficient_examples() {
        let tr = ring_t(4);
        let a = poly_t(&tr, &[1, 4]);
        assert_eq!(a.coefficient([0; 5]).unwrap(), rational(1, 1));
        assert_eq!(a.coefficient([5, 0, 0, 0, 0]), Err(Error::OutOfCap));
        assert_eq!(a.coefficient([0, 1, 0, 0, 0]), Err(Error::OutOfCap));
    }

    #[test]
    fn dual_derivative_examples() {
        let tr = Truncation::half_perimeter(3, &[Var::T, Var::Q]).unwrap();
        let q = MultiSeries::var(&tr, Var::Q).unwrap();
        let (v, d) = (&q * &q).dual_derivative_at_one(Var::Q).unwrap();
        assert_eq!(
            (v.constant_term(), d.constant_term()),
            (rational(1, 1), rational(2, 1))
        );
        let slice = &(&(&q * &q) + &q.scale_int(4)) + &MultiSeries::one(&tr);
        let (v, d) = slice.dual_derivative_at_one(Var::Q).unwrap();
        assert_eq!(
            (v.constant_term(), d.constant_term()),
            (rational(6, 1), rational(6, 1))
        );
        let t = MultiSeries::var(&tr, Var::T).unwrap();
        let (v, d) = t.dual_derivative_at_one(Var::Q).unwrap();
        assert_eq!(v.coefficient([1, 0, 0, 0, 0]).unwrap(), rational(1, 1));
        assert!(d.is_zero());
    }

    #[test]
    fn div_one_minus_is_exact_or_fails() {
        let tr = Truncation::constants()
            .with_var(Var::Y, 1, 3)
            .unwrap()
            .with_var(Var::U, 0, 3)
            .unwrap();
        let u = MultiSeries::var(&tr, Var::U).unwrap();
        let y = MultiSeries::var(&tr, Var::Y).unwrap();
        let one = MultiSeries::one(&tr);
        let f = &(&one + &(&y * &u)) + &(&u * &u);
        let prod = &f * &(&one - &u);
        assert_eq!(
            prod.div_one_minus(Var::U).unwrap(),
            f.truncate_var(Var::U, 2)
        );
        assert_eq!(f.div_one_minus(Var::U), Err(Error::NotDivisible("1 - var")));
    }

    #[test]
    fn div_mono_lowers_caps() {
        let tr = Truncation::half_perimeter(3, &[Var::T, Var::Y]).unwrap();
        let y = MultiSeries::var(&tr, Var::Y).unwrap();
        let s = &y * &(&MultiSeries::one(&tr) - &y).invert().unwrap();
        let d = s.div_var(Var::Y, 1).unwrap();
        assert_eq!(d.truncation().total(), Some(4));
        assert_eq!(d.coefficient([0, 2, 0, 0, 0]).unwrap(), rational(1, 1));
        assert_eq!(
            MultiSeries::one(&tr).div_var(Var::Y, 1),
            Err(Error::NotDivisible("monomial"))
        );
    }
}
