//! Three-way consistency: brute-force geometry, recurrence oracle and
//! closed forms must give identical coefficient tables.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::closed_form::{f1_qq, g1_full, gbt_u, gt_1, gt_u, EndTerms};
use crate::error::Result;
use crate::oracle::{kernel_residual, ColumnIndexedGf, Mutation, Oracle};
use crate::poly::{refined_counts, Class, Family};
use crate::series::{MultiSeries, Var};

/// Coefficients keyed by `[2v, h, B, U, a - 1]`; zero entries are absent.
pub type Table = BTreeMap<[u32; 5], BigInt>;

/// First coefficient on which two tables disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub key: [u32; 5],
    pub left: BigInt,
    pub right: BigInt,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of {}: {} vs {}",
            monomial(self.key),
            self.left,
            self.right
        )
    }
}

/// `[2v, h, B, U, a - 1]` as `x^v y^h p^B q^U u^(a-1)`.
pub fn monomial(key: [u32; 5]) -> String {
    let mut parts = Vec::new();
    let names = ["x", "y", "p", "q", "u"];
    let exps = [key[0] / 2, key[1], key[2], key[3], key[4]];
    for (name, e) in names.iter().zip(exps) {
        match e {
            0 => {}
            1 => parts.push(String::from(*name)),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if key[0] % 2 == 1 {
        parts.push(String::from("t"));
    }
    if parts.is_empty() {
        String::from("1")
    } else {
        parts.join(" ")
    }
}

fn half_perimeter(key: &[u32; 5]) -> u32 {
    key[0] / 2 + key[1] + key[0] % 2
}

/// First disagreement, scanning by half-perimeter and then by key.
pub fn first_difference(a: &Table, b: &Table) -> Option<Mismatch> {
    let mut keys: Vec<&[u32; 5]> = a.keys().chain(b.keys()).collect();
    keys.sort_by_key(|k| (half_perimeter(k), **k));
    keys.dedup();
    let zero = BigInt::zero();
    keys.into_iter().find_map(|k| {
        let (x, y) = (a.get(k).unwrap_or(&zero), b.get(k).unwrap_or(&zero));
        (x != y).then(|| Mismatch {
            key: *k,
            left: x.clone(),
            right: y.clone(),
        })
    })
}

fn from_counts<I: IntoIterator<Item = ([u32; 5], C)>, C: Into<BigInt>>(it: I) -> Table {
    let mut out = Table::new();
    for (k, c) in it {
        let c: BigInt = c.into();
        if !c.is_zero() {
            *out.entry(k).or_default() += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Coefficients of a series; a non-integer coefficient is reported under
/// its key with value `-1`, which never matches a count.
pub fn series_table(s: &MultiSeries) -> Table {
    from_counts(s.terms().map(|(m, c)| {
        let v = if c.is_integer() {
            c.to_integer()
        } else {
            BigInt::from(-1)
        };
        (m.exps(), v)
    }))
}

fn project(t: &Table, f: impl Fn([u32; 5]) -> [u32; 5]) -> Table {
    from_counts(t.iter().map(|(k, c)| (f(*k), c.clone())))
}

fn diagonal(k: [u32; 5]) -> [u32; 5] {
    [k[0], k[1], 0, k[2] + k[3], 0]
}

fn forget_u(k: [u32; 5]) -> [u32; 5] {
    [k[0], k[1], k[2], k[3], 0]
}

fn oracle_table(gf: &ColumnIndexedGf) -> Table {
    from_counts(gf.table())
}

fn brute(bound: u32, class: Class, family: Family) -> Result<Table> {
    Ok(from_counts(refined_counts(bound, class, family, false)?))
}

/// One line of a report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub bound: u32,
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            let tag = if l.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {:<34} {}", l.name, l.detail)?;
        }
        Ok(())
    }
}

fn compare(lines: &mut Vec<CheckLine>, name: String, a: &Table, b: &Table) {
    let (passed, detail) = match first_difference(a, b) {
        None => (true, format!("{} coefficients agree", a.len())),
        Some(m) => (false, format!("{m}")),
    };
    lines.push(CheckLine {
        name,
        passed,
        detail,
    });
}

/// Brute force vs oracle vs closed form for every family, plus the kernel
/// residual, up to half-perimeter `bound`. The mutation, if any, is applied
/// to the oracle only.
pub fn run_suite(bound: u32, mutation: Option<Mutation>) -> Result<Report> {
    let oracle = Oracle::new(bound)?.with_mutation(mutation);
    let mut lines = Vec::new();

    let f_brute = brute(bound, Class::ColumnConvex, Family::All)?;
    let f_oracle = oracle_table(&oracle.run_f()?);
    compare(
        &mut lines,
        String::from("F: geometry = oracle (p, q, u)"),
        &f_brute,
        &f_oracle,
    );
    let f_closed = series_table(&f1_qq(bound)?);
    let f_diag = project(&f_brute, diagonal);
    compare(
        &mut lines,
        String::from("F: geometry = closed form (q, q)"),
        &f_diag,
        &f_closed,
    );
    compare(
        &mut lines,
        String::from("F: oracle = closed form (q, q)"),
        &project(&f_oracle, diagonal),
        &f_closed,
    );

    let [gbt, gt, gb, g] = oracle.run_g_chain()?;
    let gtu = gt_u(bound)?;
    let families: [(&str, Family, &ColumnIndexedGf, MultiSeries); 3] = [
        ("G^bt", Family::BottomTop, &gbt, gbt_u(bound)?),
        ("G^t", Family::Top, &gt, gtu.clone()),
        ("G^b", Family::Bottom, &gb, gtu.swap_vars(Var::P, Var::Q)),
    ];
    for (name, family, gf, closed) in families {
        let b = brute(bound, Class::Convex, family)?;
        compare(
            &mut lines,
            format!("{name}: geometry = oracle"),
            &b,
            &oracle_table(gf),
        );
        compare(
            &mut lines,
            format!("{name}: geometry = closed form"),
            &b,
            &series_table(&closed),
        );
    }
    let top1 = project(&brute(bound, Class::Convex, Family::Top)?, forget_u);
    compare(
        &mut lines,
        String::from("G^t(1): geometry = closed form"),
        &top1,
        &series_table(&gt_1(bound)?),
    );

    let g_brute = project(&brute(bound, Class::Convex, Family::All)?, forget_u);
    compare(
        &mut lines,
        String::from("G: geometry = oracle"),
        &g_brute,
        &project(&oracle_table(&g), forget_u),
    );
    compare(
        &mut lines,
        String::from("G: geometry = closed form"),
        &g_brute,
        &series_table(&g1_full(bound, EndTerms::Mirrored)?),
    );

    let residual = kernel_residual(bound, mutation)?;
    let detail = if residual.is_zero() {
        String::from("zero to truncation order")
    } else {
        let first = series_table(&residual).into_iter().next();
        match first {
            Some((k, c)) => format!("nonzero, e.g. {} at {}", c, monomial(k)),
            None => String::from("nonzero"),
        }
    };
    lines.push(CheckLine {
        name: String::from("F: kernel residual"),
        passed: residual.is_zero(),
        detail,
    });
    Ok(Report { bound, lines })
}
