//! Output formats. Series go through [`Payload`] first, so a cached result
//! renders exactly like a fresh one.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{bail, Result};
use serde::{Deserialize, Serialize};
use serde_json::json;

use carlitz_core::asymptotics::{AsymptoticTarget, ConvergenceReport, Real};
use carlitz_core::check::Report;
use carlitz_core::closed_form::Expansion;
use carlitz_core::poly::{Class, CountTable};
use carlitz_core::{MultiSeries, Rational, UniSeries, Var};

use crate::Format;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub variables: Vec<String>,
    /// Per-variable caps; `total` is the weighted-degree cap when present.
    pub caps: BTreeMap<String, u32>,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Series(SeriesJson),
    Pair { branches: [SeriesJson; 2] },
}

fn term(exps: Vec<u32>, c: &Rational) -> Term {
    Term {
        exps,
        num: c.numer().to_string(),
        den: c.denom().to_string(),
    }
}

fn multi(s: &MultiSeries) -> SeriesJson {
    let trunc = s.truncation();
    let vars: Vec<Var> = trunc.active_vars().collect();
    let mut caps: BTreeMap<String, u32> = vars
        .iter()
        .map(|&v| (v.name().to_string(), trunc.cap(v)))
        .collect();
    if let Some(total) = trunc.total() {
        caps.insert("total".into(), total);
    }
    let terms = s
        .terms()
        .map(|(m, c)| term(vars.iter().map(|&v| m.exp(v)).collect(), &c))
        .collect();
    SeriesJson {
        variables: vars.iter().map(|v| v.name().to_string()).collect(),
        caps,
        terms,
    }
}

fn univariate(variable: &str, s: &UniSeries) -> SeriesJson {
    let terms = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| term(vec![k as u32], c))
        .collect();
    SeriesJson {
        variables: vec![variable.to_string()],
        caps: BTreeMap::from([(variable.to_string(), s.order() as u32)]),
        terms,
    }
}

pub fn payload(e: &Expansion) -> Result<Payload> {
    Ok(match e {
        Expansion::Multi(s) => Payload::Series(multi(s)),
        Expansion::Pair(a, b) => Payload::Pair {
            branches: [multi(a), multi(b)],
        },
        Expansion::Univariate { variable, series } => Payload::Series(univariate(variable, series)),
    })
}

fn coefficient(t: &Term) -> String {
    if t.den == "1" {
        t.num.clone()
    } else {
        format!("{}/{}", t.num, t.den)
    }
}

/// Dense coefficient list of a one-variable series.
fn dense(s: &SeriesJson) -> Option<Vec<String>> {
    let [v] = s.variables.as_slice() else {
        return None;
    };
    let order = *s.caps.get(v)? as usize;
    let mut out = vec!["0".to_string(); order + 1];
    for t in &s.terms {
        out[t.exps[0] as usize] = coefficient(t);
    }
    Some(out)
}

fn monomial_text(vars: &[String], exps: &[u32]) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e > 0)
        .map(|(v, &e)| {
            if e == 1 {
                v.clone()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    parts.join("*")
}

fn series_text(s: &SeriesJson) -> String {
    if let Some(coeffs) = dense(s) {
        return format!("{}\n", coeffs.join(", "));
    }
    let mut out = String::new();
    for t in &s.terms {
        let m = monomial_text(&s.variables, &t.exps);
        let c = coefficient(t);
        match (m.is_empty(), c.as_str()) {
            (true, _) => writeln!(out, "{c}"),
            (false, "1") => writeln!(out, "{m}"),
            (false, _) => writeln!(out, "{c}*{m}"),
        }
        .unwrap();
    }
    out
}

fn series_csv(s: &SeriesJson) -> String {
    let mut out = String::new();
    if let Some(coeffs) = dense(s) {
        out.push_str("n,count\n");
        for (k, c) in coeffs.iter().enumerate() {
            writeln!(out, "{k},{c}").unwrap();
        }
        return out;
    }
    writeln!(out, "{},num,den", s.variables.join(",")).unwrap();
    for t in &s.terms {
        let exps: Vec<String> = t.exps.iter().map(u32::to_string).collect();
        writeln!(out, "{},{},{}", exps.join(","), t.num, t.den).unwrap();
    }
    out
}

fn series_bfile(s: &SeriesJson) -> Result<String> {
    let Some(coeffs) = dense(s) else {
        bail!("b-file output needs a series in one variable");
    };
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate() {
        if c.contains('/') {
            bail!("coefficient {k} is not an integer");
        }
        writeln!(out, "{k} {c}").unwrap();
    }
    Ok(out)
}

pub fn series(p: &Payload, format: Format) -> Result<String> {
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(p)? + "\n");
    }
    match p {
        Payload::Series(s) => match format {
            Format::Text => Ok(series_text(s)),
            Format::Csv => Ok(series_csv(s)),
            Format::Bfile => series_bfile(s),
            Format::Json => unreachable!(),
        },
        Payload::Pair { branches } => match format {
            Format::Text => Ok(format!(
                "branch +\n{}branch -\n{}",
                series_text(&branches[0]),
                series_text(&branches[1])
            )),
            _ => bail!("a root pair renders as text or json only"),
        },
    }
}

fn levels_text(levels: &BTreeMap<(u32, u32), u64>) -> String {
    let mut terms: Vec<(&(u32, u32), &u64)> = levels.iter().collect();
    terms.sort_by_key(|(&(b, u), _)| std::cmp::Reverse((b + u, b)));
    let parts: Vec<String> = terms
        .into_iter()
        .map(|(&(b, u), &c)| {
            let m = monomial_text(&["p".into(), "q".into()], &[b, u]);
            match (m.is_empty(), c) {
                (true, _) => c.to_string(),
                (false, 1) => m,
                (false, _) => format!("{c}{m}"),
            }
        })
        .collect();
    parts.join(" + ")
}

pub fn count_table(
    t: &CountTable,
    class: Class,
    carlitz: bool,
    stats: bool,
    format: Format,
) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Text => {
            for (n, row) in &t.rows {
                if stats {
                    writeln!(
                        out,
                        "{n:>3} {:>12}  {}",
                        row.count,
                        levels_text(&row.levels)
                    )?;
                } else {
                    writeln!(out, "{n:>3} {:>12}", row.count)?;
                }
            }
        }
        Format::Bfile => {
            for (n, row) in &t.rows {
                writeln!(out, "{n} {}", row.count)?;
            }
        }
        Format::Csv => {
            out.push_str(if stats {
                "n,count,levels\n"
            } else {
                "n,count\n"
            });
            for (n, row) in &t.rows {
                if stats {
                    writeln!(out, "{n},{},\"{}\"", row.count, levels_text(&row.levels))?;
                } else {
                    writeln!(out, "{n},{}", row.count)?;
                }
            }
        }
        Format::Json => {
            let rows: Vec<_> = t
                .rows
                .iter()
                .map(|(n, row)| {
                    let mut r = json!({ "n": n, "count": row.count });
                    if stats {
                        r["levels"] = row
                            .levels
                            .iter()
                            .map(|(&(b, u), &c)| json!({ "B": b, "U": u, "count": c }))
                            .collect();
                    }
                    r
                })
                .collect();
            let class = match class {
                Class::ColumnConvex => "cc",
                Class::Convex => "convex",
            };
            let doc = json!({ "class": class, "carlitz": carlitz, "bound": t.bound, "rows": rows });
            out = serde_json::to_string_pretty(&doc)? + "\n";
        }
    }
    Ok(out)
}

pub fn check_report(r: &Report, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let lines: Vec<_> = r
                .lines
                .iter()
                .map(|l| json!({ "name": l.name, "passed": l.passed, "detail": l.detail }))
                .collect();
            let doc = json!({ "bound": r.bound, "passed": r.passed(), "lines": lines });
            serde_json::to_string_pretty(&doc)? + "\n"
        }
        _ => {
            let verdict = if r.passed() { "PASS" } else { "FAIL" };
            format!("{r}{verdict} n <= {}\n", r.bound)
        }
    })
}

pub fn prediction(
    target: AsymptoticTarget,
    n: u32,
    value: &Real,
    digits: u32,
    format: Format,
) -> Result<String> {
    let v = value.to_sig_string(digits);
    Ok(match format {
        Format::Text => format!("target {target}\nn {n}\npredicted {v}\n"),
        Format::Csv => format!("n,predicted\n{n},{v}\n"),
        Format::Json => {
            serde_json::to_string_pretty(
                &json!({ "target": target.name(), "n": n, "predicted": v }),
            )? + "\n"
        }
        Format::Bfile => bail!("b-file output is for integer sequences"),
    })
}

pub fn convergence(
    r: &ConvergenceReport,
    growth: Option<&(u32, Real)>,
    digits: u32,
    format: Format,
) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Text => {
            writeln!(out, "target {}", r.target)?;
            for row in &r.rows {
                writeln!(out, "n {}", row.n)?;
                writeln!(out, "  exact     {}", row.exact)?;
                writeln!(out, "  predicted {}", row.predicted.to_sig_string(digits))?;
                writeln!(out, "  ratio     {}", row.ratio.to_sig_string(digits))?;
            }
            writeln!(out, "monotone {}", if r.monotone { "yes" } else { "no" })?;
            if let Some((n, d)) = growth {
                writeln!(out, "growth deviation at {n} {}", d.to_sig_string(digits))?;
            }
        }
        Format::Csv => {
            out.push_str("n,exact,predicted,ratio\n");
            for row in &r.rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    row.n,
                    row.exact,
                    row.predicted.to_sig_string(digits),
                    row.ratio.to_sig_string(digits)
                )?;
            }
        }
        Format::Json => {
            let rows: Vec<_> = r
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "n": row.n,
                        "exact": row.exact.to_string(),
                        "predicted": row.predicted.to_sig_string(digits),
                        "ratio": row.ratio.to_sig_string(digits),
                    })
                })
                .collect();
            let mut doc =
                json!({ "target": r.target.name(), "rows": rows, "monotone": r.monotone });
            if let Some((n, d)) = growth {
                doc["growth"] = json!({ "n": n, "deviation": d.to_sig_string(digits) });
            }
            out = serde_json::to_string_pretty(&doc)? + "\n";
        }
        Format::Bfile => bail!("b-file output is for integer sequences"),
    }
    Ok(out)
}
