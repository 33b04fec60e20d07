//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a counterexample or
//! `oracle-compare` sees a disagreement, 2 on usage errors.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::egf::Egf;
use crate::error::{Error, Result};
use crate::grammar::whitney_row_from_grammar;
use crate::identities::{self, CheckReport, Grid, Status};
use crate::oracle::{count_mr_partitions, count_whitney_pairs};
use crate::rat::{fmt_rat, int, parse_rat, Rat};
use crate::riordan::{a_sequence, exp_z_sequence, ExpRiordan};
use crate::triangles::{
    classical_seq, family, whitney2_row, whitney2_row_egf, FamilyKind, FamilyParams, SeqKind,
    Triangle, TriangleKind,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Parser, Debug)]
#[command(
    name = "whitney",
    version,
    about = "Exact r-Whitney numbers, r-Dowling polynomials and identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print rows 0..=n of a number triangle.
    Table {
        /// whitney2, whitney1, mstirling2 or mstirling1
        kind: String,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Rational, e.g. 3 or 1/2.
        #[arg(long, default_value = "0")]
        r: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print members 0..=n of a polynomial family, coefficients from degree 0 up.
    Poly {
        /// touchard, touchard-hat, dowling, dowling-hat, bernoulli or euler
        family: String,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value = "0")]
        r: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print EGF coefficients 0..=order of a named series.
    Series {
        /// bernoulli, euler, cauchy, bell, expm1, log1p, a-w2, a-w1, z-w2 or z-w1
        name: String,
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value = "0")]
        r: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run one identity check, `all`, or `list` the registry.
    Verify {
        name: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_h: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        m: Option<Vec<u32>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        r: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        s: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        l: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare W(n,k) from the recurrence, grammar, EGF and both enumerations.
    OracleCompare {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value_t = Format::Pretty)]
        format: Format,
    },
}

struct GridOverride {
    max_n: Option<usize>,
    max_h: Option<usize>,
    m: Option<Vec<u32>>,
    r: Option<Vec<i64>>,
    s: Option<Vec<i64>>,
    l: Option<Vec<i64>>,
}

impl GridOverride {
    fn apply(&self, mut g: Grid) -> Grid {
        if let Some(n) = self.max_n {
            g = g.with_max_n(n);
        }
        if let Some(h) = self.max_h {
            g = g.with_max_h(h);
        }
        if let Some(m) = &self.m {
            g.m = m.clone();
        }
        if let Some(r) = &self.r {
            g.r = r.clone();
        }
        if let Some(s) = &self.s {
            g.s = s.clone();
        }
        if let Some(l) = &self.l {
            g.l = l.clone();
        }
        g
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidParameter(format!("output: {e}"))
}

fn json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report types serialize")
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Table {
            kind,
            m,
            r,
            n,
            format,
        } => {
            let kind: TriangleKind = kind.parse()?;
            let t = Triangle::build(kind, m, &parse_rat(&r)?, n)?;
            let text = match format {
                Format::Csv => t.to_csv(),
                Format::Json => t.to_json() + "\n",
                Format::Pretty => t.to_string(),
            };
            write!(out, "{text}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Poly {
            family: name,
            m,
            r,
            n,
            format,
        } => {
            let kind: FamilyKind = name.parse()?;
            let params = FamilyParams::new(m, parse_rat(&r)?);
            let polys = (0..=n)
                .map(|i| family(kind, &params, i))
                .collect::<Result<Vec<_>>>()?;
            let text = match format {
                Format::Csv => polys
                    .iter()
                    .map(|p| coeff_strings(p.coeffs()).join(",") + "\n")
                    .collect(),
                Format::Json => {
                    let rows: Vec<Vec<String>> =
                        polys.iter().map(|p| coeff_strings(p.coeffs())).collect();
                    json(&serde_json::json!({
                        "family": name,
                        "m": m,
                        "r": fmt_rat(&params.r),
                        "polys": rows,
                    })) + "\n"
                }
                Format::Pretty => polys
                    .iter()
                    .enumerate()
                    .map(|(i, p)| format!("{i}: {p}\n"))
                    .collect(),
            };
            write!(out, "{text}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Series {
            name,
            order,
            m,
            r,
            format,
        } => {
            let e = named_series(&name, order, m, &parse_rat(&r)?)?;
            let text = match format {
                Format::Csv => coeff_strings(e.coeffs()).join(",") + "\n",
                Format::Json => e.to_json() + "\n",
                Format::Pretty => format!("{e}\n"),
            };
            write!(out, "{text}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            name,
            max_n,
            max_h,
            m,
            r,
            s,
            l,
            format,
        } => {
            if name == "list" {
                for n in identities::names() {
                    writeln!(out, "{n}").map_err(io)?;
                }
                return Ok(EXIT_OK);
            }
            let ov = GridOverride {
                max_n,
                max_h,
                m,
                r,
                s,
                l,
            };
            let reports = if name == "all" {
                identities::run_all_with(&|g| ov.apply(g))?
            } else {
                let base = (identities::find(&name)?.grid)();
                vec![identities::run_check(&name, Some(ov.apply(base)))?]
            };
            write_reports(&reports, format, out)?;
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            Ok(if failed { EXIT_COUNTEREXAMPLE } else { EXIT_OK })
        }
        Command::OracleCompare { n, k, m, r, format } => oracle_compare(n, k, m, r, format, out),
    }
}

fn coeff_strings(c: &[Rat]) -> Vec<String> {
    if c.is_empty() {
        vec!["0".to_string()]
    } else {
        c.iter().map(fmt_rat).collect()
    }
}

fn named_series(name: &str, order: usize, m: u32, r: &Rat) -> Result<Egf> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let mm = int(m as i64);
    let seq = |kind| Ok(Egf::new(classical_seq(kind, order)));
    match name {
        "bernoulli" => seq(SeqKind::BernoulliNum),
        "euler" => seq(SeqKind::EulerNumAtZero),
        "cauchy" => seq(SeqKind::Cauchy1),
        "bell" => seq(SeqKind::Bell),
        "expm1" => Ok(Egf::expm1_scaled(&mm, order)),
        "log1p" => Ok(Egf::log1p_scaled(&mm, order)),
        "a-w2" => Ok(Egf::new(
            a_sequence(&ExpRiordan::whitney2(m, r, order + 1), order)?.0,
        )),
        "a-w1" => Ok(Egf::new(
            a_sequence(&ExpRiordan::whitney1(m, r, order + 1), order)?.0,
        )),
        "z-w2" => Ok(Egf::new(
            exp_z_sequence(&ExpRiordan::whitney2(m, r, order + 1), order)?.0,
        )),
        "z-w1" => Ok(Egf::new(
            exp_z_sequence(&ExpRiordan::whitney1(m, r, order + 1), order)?.0,
        )),
        _ => Err(Error::Parse(format!("unknown series `{name}`"))),
    }
}

fn write_reports(reports: &[CheckReport], format: Format, out: &mut dyn Write) -> Result<()> {
    let text = match format {
        Format::Json => json(&reports) + "\n",
        Format::Pretty => identities::format_table(reports),
        Format::Csv => {
            let mut s = String::from("name,mode,grid_size,status,elapsed_ms\n");
            for r in reports {
                s.push_str(&format!(
                    "{},{},{},{},{}\n",
                    r.name,
                    r.mode.name(),
                    r.grid_size,
                    r.status,
                    r.elapsed_ms
                ));
            }
            s
        }
    };
    write!(out, "{text}").map_err(io)
}

#[derive(Serialize)]
struct Comparison {
    n: usize,
    k: usize,
    m: u32,
    r: u32,
    recurrence: String,
    grammar: String,
    egf: String,
    pairs: String,
    mr: String,
    agree: bool,
}

fn oracle_compare(
    n: usize,
    k: usize,
    m: u32,
    r: u32,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let rr = int(r as i64);
    let pick = |row: Vec<Rat>| row.get(k).cloned().unwrap_or_else(|| int(0));
    let values = [
        pick(whitney2_row(m, &rr, n)),
        pick(whitney_row_from_grammar(m, r, n)?),
        pick(whitney2_row_egf(m, &rr, n)),
        int(count_whitney_pairs(n, k, m, r as usize)? as i64),
        int(count_mr_partitions(n, k, m, r as usize)? as i64),
    ];
    let agree = values.iter().all(|v| v == &values[0]);
    let s: Vec<String> = values.iter().map(fmt_rat).collect();
    let cmp = Comparison {
        n,
        k,
        m,
        r,
        recurrence: s[0].clone(),
        grammar: s[1].clone(),
        egf: s[2].clone(),
        pairs: s[3].clone(),
        mr: s[4].clone(),
        agree,
    };
    let text = match format {
        Format::Json => json(&cmp) + "\n",
        Format::Pretty | Format::Csv => format!(
            "recurrence={} grammar={} egf={} pairs={} mr={} {}\n",
            cmp.recurrence,
            cmp.grammar,
            cmp.egf,
            cmp.pairs,
            cmp.mr,
            if agree { "AGREE" } else { "DISAGREE" }
        ),
    };
    write!(out, "{text}").map_err(io)?;
    Ok(if agree { EXIT_OK } else { EXIT_COUNTEREXAMPLE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["whitney"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn table_csv() {
        let (code, out, _) = call(&[
            "table", "whitney2", "--m", "2", "--r", "3", "--n", "2", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "1\n3,1\n9,8,1\n");
    }

    #[test]
    fn oracle_line() {
        let (code, out, _) = call(&[
            "oracle-compare",
            "--n",
            "2",
            "--k",
            "1",
            "--m",
            "2",
            "--r",
            "3",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "recurrence=8 grammar=8 egf=8 pairs=8 mr=8 AGREE\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["table", "nope", "--n", "2"]).0, 2);
        assert_eq!(call(&["table", "whitney2"]).0, 2);
        assert_eq!(call(&["verify", "nope"]).0, 2);
        assert_eq!(
            call(&[
                "oracle-compare",
                "--n",
                "12",
                "--k",
                "1",
                "--m",
                "1",
                "--r",
                "3"
            ])
            .0,
            2
        );
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn series_json() {
        let (code, out, _) = call(&["series", "a-w2", "--order", "2", "--m", "2", "--r", "3"]);
        assert_eq!(code, 0);
        let e = Egf::from_json(out.trim()).unwrap();
        assert_eq!(e.coeffs(), &[int(1), int(1), crate::rat::frac(-2, 3)]);
    }
}
