//! Executable registry of identities on r-Whitney numbers and r-Dowling
//! polynomials, each evaluated exactly over a parameter grid.
//!
//! Polynomial identities are compared coefficient by coefficient, never by
//! sampling. A failing check keeps its first counterexample, which can be
//! replayed through [`Counterexample::grid`].

mod checks;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Parameter ranges. `n` and `h` are inclusive bounds; the rest are lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub n: (usize, usize),
    pub h: (usize, usize),
    pub m: Vec<u32>,
    pub r: Vec<i64>,
    pub s: Vec<i64>,
    pub l: Vec<i64>,
}

impl Grid {
    /// `n, h <= 8`, `m in {1,2,3}`, `r, s, l in {0..3}`.
    pub fn standard() -> Grid {
        Grid {
            n: (0, 8),
            h: (0, 8),
            m: vec![1, 2, 3],
            r: (0..=3).collect(),
            s: (0..=3).collect(),
            l: (0..=3).collect(),
        }
    }

    pub fn with_max_n(mut self, max_n: usize) -> Grid {
        self.n = (self.n.0.min(max_n), max_n);
        self
    }

    pub fn with_max_h(mut self, max_h: usize) -> Grid {
        self.h = (self.h.0.min(max_h), max_h);
        self
    }

    pub fn ns(&self) -> std::ops::RangeInclusive<usize> {
        self.n.0..=self.n.1
    }

    pub fn hs(&self) -> std::ops::RangeInclusive<usize> {
        self.h.0..=self.h.1
    }

    fn validate(&self) -> Result<()> {
        if self.m.contains(&0) {
            return Err(Error::InvalidParameter("m must be positive".into()));
        }
        if self.n.0 > self.n.1 || self.h.0 > self.h.1 {
            return Err(Error::InvalidParameter("empty n or h range".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Scalar identity checked at each grid point.
    NumericAtPoints,
    /// Univariate polynomial identity (in `u` or `x`), compared coefficientwise.
    PolynomialInU,
    /// Identity in `x` and `y`, compared coefficientwise.
    BivariatePolynomial,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::NumericAtPoints => "numeric-at-points",
            Mode::PolynomialInU => "polynomial-in-u",
            Mode::BivariatePolynomial => "bivariate-polynomial",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// The parameters and both sides of the first failing comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, i64>,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    /// `base` narrowed to this point in every grid parameter it records.
    pub fn grid(&self, base: &Grid) -> Grid {
        let mut g = base.clone();
        for (key, &v) in &self.params {
            match key.as_str() {
                "n" => g.n = (v as usize, v as usize),
                "h" => g.h = (v as usize, v as usize),
                "m" => g.m = vec![v as u32],
                "r" => g.r = vec![v],
                "s" => g.s = vec![v],
                "l" => g.l = vec![v],
                _ => {}
            }
        }
        g
    }
}

/// Running count of comparisons and the first mismatch.
#[derive(Clone, Debug, Default)]
pub struct Tally {
    pub points: usize,
    pub first: Option<Counterexample>,
}

impl Tally {
    /// Compares one instance; returns whether it held.
    pub fn record<T: PartialEq + fmt::Display>(
        &mut self,
        params: &[(&str, i64)],
        lhs: &T,
        rhs: &T,
    ) -> bool {
        self.points += 1;
        let ok = lhs == rhs;
        if !ok && self.first.is_none() {
            self.first = Some(Counterexample {
                params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        ok
    }

    pub fn status(&self) -> Status {
        if self.first.is_some() {
            Status::Fail
        } else {
            Status::Pass
        }
    }
}

type Evaluator = fn(&Grid) -> Result<Tally>;

/// An alternative reading of an entry, reported next to the main statement.
#[derive(Clone, Debug)]
pub struct Variant {
    pub name: &'static str,
    pub description: &'static str,
    pub eval: Evaluator,
}

/// One registry entry.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub mode: Mode,
    pub grid: fn() -> Grid,
    pub eval: Evaluator,
    pub variants: Vec<Variant>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantReport {
    pub name: String,
    pub description: String,
    pub grid_size: usize,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub mode: Mode,
    pub grid_size: usize,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<VariantReport>,
}

pub fn registry() -> Vec<IdentityCheck> {
    checks::entries()
}

pub fn names() -> Vec<&'static str> {
    let mut v: Vec<_> = registry().iter().map(|c| c.name).collect();
    v.sort_unstable();
    v
}

pub fn find(name: &str) -> Result<IdentityCheck> {
    registry()
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Evaluates one entry (and its variants) over its default grid or `grid`.
pub fn run_check(name: &str, grid: Option<Grid>) -> Result<CheckReport> {
    let check = find(name)?;
    run_entry(&check, grid)
}

fn run_entry(check: &IdentityCheck, grid: Option<Grid>) -> Result<CheckReport> {
    let grid = grid.unwrap_or_else(check.grid);
    grid.validate()?;
    let start = Instant::now();
    let tally = (check.eval)(&grid)?;
    let variants = check
        .variants
        .iter()
        .map(|v| {
            let t = (v.eval)(&grid)?;
            Ok(VariantReport {
                name: v.name.to_string(),
                description: v.description.to_string(),
                grid_size: t.points,
                status: t.status(),
                counterexample: t.first,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport {
        name: check.name.to_string(),
        mode: check.mode,
        grid_size: tally.points,
        status: tally.status(),
        counterexample: tally.first,
        elapsed_ms: start.elapsed().as_millis() as u64,
        variants,
    })
}

/// Every entry on its default grid, in parallel, sorted by name.
pub fn run_all() -> Result<Vec<CheckReport>> {
    run_all_with(&|g| g)
}

/// Every entry on `adjust(default grid)`, in parallel, sorted by name.
pub fn run_all_with(adjust: &(dyn Fn(Grid) -> Grid + Sync)) -> Result<Vec<CheckReport>> {
    let mut reports = registry()
        .par_iter()
        .map(|c| run_entry(c, Some(adjust((c.grid)()))))
        .collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

/// Fixed-width table: name, mode, points, status, time, then variants.
pub fn format_table(reports: &[CheckReport]) -> String {
    let mut out = format!(
        "{:<24} {:<22} {:>8} {:>6} {:>9}\n",
        "identity", "mode", "points", "status", "ms"
    );
    for r in reports {
        out.push_str(&format!(
            "{:<24} {:<22} {:>8} {:>6} {:>9}\n",
            r.name,
            r.mode.name(),
            r.grid_size,
            r.status,
            r.elapsed_ms
        ));
        if let Some(c) = &r.counterexample {
            out.push_str(&format!(
                "  counterexample {:?}: {} != {}\n",
                c.params, c.lhs, c.rhs
            ));
        }
        for v in &r.variants {
            out.push_str(&format!(
                "  variant {:<20} {:>8} {:>6}  {}\n",
                v.name, v.grid_size, v.status, v.description
            ));
        }
    }
    out
}
