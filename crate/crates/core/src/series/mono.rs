use core::fmt;

/// Series variables. `T` is the half-step variable with `x = T^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T,
    Y,
    P,
    Q,
    U,
}

pub const NVARS: usize = 5;

impl Var {
    pub const ALL: [Var; NVARS] = [Var::T, Var::Y, Var::P, Var::Q, Var::U];

    pub const fn index(self) -> usize {
        self as usize
    }

    pub const fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Y => "y",
            Var::P => "p",
            Var::Q => "q",
            Var::U => "u",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == name)
    }

    const fn shift(self) -> u32 {
        (NVARS as u32 - 1 - self as u32) * FIELD_BITS
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

const FIELD_BITS: u32 = 12;
const FIELD_MASK: u64 = (1 << FIELD_BITS) - 1;
/// Largest exponent a cap may allow; sums of two admitted exponents stay below `2^12`.
pub(crate) const MAX_EXPONENT: u32 = 2047;

/// Exponent vector packed into one word, `t` in the most significant field,
/// so the natural order is lexicographic in `(t, y, p, q, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(pub(crate) u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn new(exps: [u32; NVARS]) -> Mono {
        let mut m = Mono::ONE;
        for v in Var::ALL {
            debug_assert!(exps[v.index()] <= MAX_EXPONENT);
            m = m.with(v, exps[v.index()]);
        }
        m
    }

    pub fn var(v: Var, e: u32) -> Mono {
        Mono::ONE.with(v, e)
    }

    #[inline]
    pub fn exp(self, v: Var) -> u32 {
        ((self.0 >> v.shift()) & FIELD_MASK) as u32
    }

    #[inline]
    pub fn with(self, v: Var, e: u32) -> Mono {
        let cleared = self.0 & !(FIELD_MASK << v.shift());
        Mono(cleared | ((e as u64 & FIELD_MASK) << v.shift()))
    }

    pub fn exps(self) -> [u32; NVARS] {
        Var::ALL.map(|v| self.exp(v))
    }

    /// Product of monomials. Callers keep exponents at most [`MAX_EXPONENT`].
    #[inline]
    pub(crate) fn mul(self, other: Mono) -> Mono {
        Mono(self.0 + other.0)
    }

    pub fn total_degree(self) -> u32 {
        Var::ALL.iter().map(|&v| self.exp(v)).sum()
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_roundtrip_and_order() {
        let m = Mono::new([3, 0, 7, 1, 2]);
        assert_eq!(m.exps(), [3, 0, 7, 1, 2]);
        assert_eq!(m.with(Var::P, 0).exps(), [3, 0, 0, 1, 2]);
        assert!(Mono::var(Var::T, 1) > Mono::var(Var::Y, 40));
        assert_eq!(
            Mono::var(Var::Q, 2).mul(Mono::var(Var::Q, 3)).exp(Var::Q),
            5
        );
        assert_eq!(alloc::format!("{}", m), "t^3*p^7*q*u^2");
    }
}
