use alloc::string::{String, ToString};
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Pow, Signed, Zero};

/// Fixed-point decimal: `mantissa * 10^-scale`. Operations truncate toward
/// negative infinity, so each one loses at most one unit in the last place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Real {
    m: BigInt,
    scale: u32,
}

fn ten_pow(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

impl Real {
    pub fn zero(scale: u32) -> Real {
        Real {
            m: BigInt::zero(),
            scale,
        }
    }

    pub fn from_int(v: impl Into<BigInt>, scale: u32) -> Real {
        Real {
            m: v.into() * ten_pow(scale),
            scale,
        }
    }

    pub fn from_ratio(num: impl Into<BigInt>, den: impl Into<BigInt>, scale: u32) -> Real {
        let (num, den) = (num.into(), den.into());
        assert!(!den.is_zero(), "zero denominator");
        Real {
            m: (num * ten_pow(scale)).div_floor(&den),
            scale,
        }
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_positive(&self) -> bool {
        self.m.is_positive()
    }

    pub fn abs(&self) -> Real {
        Real {
            m: self.m.abs(),
            scale: self.scale,
        }
    }

    /// Floor of the square root; panics on a negative argument.
    pub fn sqrt(&self) -> Real {
        assert!(!self.m.is_negative(), "square root of a negative number");
        Real {
            m: (&self.m * ten_pow(self.scale)).sqrt(),
            scale: self.scale,
        }
    }

    pub fn powi(&self, mut e: u32) -> Real {
        let mut base = self.clone();
        let mut acc = Real::from_int(1, self.scale);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// π by Machin's formula.
    pub fn pi(scale: u32) -> Real {
        let work = scale + 10;
        let one = ten_pow(work);
        let arctan_inv = |x: u32| {
            let x2 = BigInt::from(x) * x;
            let mut power = &one / x;
            let mut sum = BigInt::zero();
            let mut k = 0u32;
            while !power.is_zero() {
                let term = &power / (2 * k + 1);
                if k.is_multiple_of(2) {
                    sum += term;
                } else {
                    sum -= term;
                }
                power /= &x2;
                k += 1;
            }
            sum
        };
        let m = 4 * (4 * arctan_inv(5) - arctan_inv(239));
        Real {
            m: m / ten_pow(10),
            scale,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_sig_string(20).parse().unwrap_or(f64::NAN)
    }

    /// Decimal rendering rounded to `digits` significant digits, without
    /// trailing zeros.
    pub fn to_sig_string(&self, digits: u32) -> String {
        if self.m.is_zero() {
            return String::from("0");
        }
        let digits = digits.max(1);
        let abs = self.m.abs();
        let len = abs.to_string().len() as u32;
        let (mut r, mut drop) = (abs.clone(), 0u32);
        if len > digits {
            drop = len - digits;
            let unit = ten_pow(drop);
            let (q, rem) = abs.div_rem(&unit);
            r = if rem * 2 >= unit { q + 1 } else { q };
            if r.to_string().len() as u32 > digits {
                r /= 10;
                drop += 1;
            }
        }
        let mut s = r.to_string();
        let e = drop as i64 - self.scale as i64;
        if e >= 0 {
            s.extend(core::iter::repeat_n('0', e as usize));
        } else {
            let point = s.len() as i64 + e;
            if point <= 0 {
                let mut padded = String::from("0.");
                padded.extend(core::iter::repeat_n('0', (-point) as usize));
                padded.push_str(&s);
                s = padded;
            } else {
                s.insert(point as usize, '.');
            }
            let trimmed = s.trim_end_matches('0').trim_end_matches('.').len();
            s.truncate(trimmed);
        }
        if self.m.sign() == Sign::Minus {
            s.insert(0, '-');
        }
        s
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Real) -> Ordering {
        debug_assert_eq!(self.scale, other.scale);
        self.m.cmp(&other.m)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map_or(50, |p| p as u32);
        f.write_str(&self.to_sig_string(digits))
    }
}

impl Add for &Real {
    type Output = Real;
    fn add(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.scale, rhs.scale);
        Real {
            m: &self.m + &rhs.m,
            scale: self.scale,
        }
    }
}

impl Sub for &Real {
    type Output = Real;
    fn sub(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.scale, rhs.scale);
        Real {
            m: &self.m - &rhs.m,
            scale: self.scale,
        }
    }
}

impl Mul for &Real {
    type Output = Real;
    fn mul(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.scale, rhs.scale);
        Real {
            m: (&self.m * &rhs.m).div_floor(&ten_pow(self.scale)),
            scale: self.scale,
        }
    }
}

impl Div for &Real {
    type Output = Real;
    fn div(self, rhs: &Real) -> Real {
        debug_assert_eq!(self.scale, rhs.scale);
        assert!(!rhs.m.is_zero(), "division by zero");
        Real {
            m: (&self.m * ten_pow(self.scale)).div_floor(&rhs.m),
            scale: self.scale,
        }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            m: -&self.m,
            scale: self.scale,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let pi = Real::pi(60);
        assert_eq!(
            pi.to_sig_string(50),
            "3.1415926535897932384626433832795028841971693993751"
        );
    }

    #[test]
    fn sqrt_two() {
        let r = Real::from_int(2, 40).sqrt();
        assert_eq!(r.to_sig_string(30), "1.41421356237309504880168872421");
    }

    #[test]
    fn rendering() {
        assert_eq!(Real::from_int(409600, 30).to_sig_string(50), "409600");
        assert_eq!(Real::from_ratio(3, 10, 30).to_sig_string(50), "0.3");
        assert_eq!(Real::from_ratio(-1, 400, 30).to_sig_string(5), "-0.0025");
        assert_eq!(Real::from_ratio(2, 3, 30).to_sig_string(3), "0.667");
        assert_eq!(Real::from_ratio(999_999, 1, 30).to_sig_string(3), "1000000");
    }
}
