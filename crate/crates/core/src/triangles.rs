//! Number triangles and polynomial families built from their defining
//! recurrences and generating functions.
//!
//! These are the reference values the other modules are checked against.
//! `r` is taken as an arbitrary rational wherever the algebra allows it.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::egf::{egf_mul, egf_pow, Egf};
use crate::error::{Error, Result};
use crate::poly::{stepped_product, Poly};
use crate::rat::{binomial, fmt_rat, int, parse_rat, Rat};

fn m_rat(m: u32) -> Rat {
    int(m as i64)
}

fn check_m(m: u32) -> Result<()> {
    if m == 0 {
        Err(Error::InvalidParameter(
            "m must be a positive integer".into(),
        ))
    } else {
        Ok(())
    }
}

/// Rows `0..=n` of `W_{m,r}` from `W(n,k) = W(n-1,k-1) + (km + r) W(n-1,k)`.
pub fn whitney2_rows(m: u32, r: &Rat, n: usize) -> Vec<Vec<Rat>> {
    let m = m_rat(m);
    let mut rows = vec![vec![Rat::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let row = (0..=i)
            .map(|k| {
                let left = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    Rat::zero()
                };
                let up = prev
                    .get(k)
                    .map(|w| (int(k as i64) * &m + r) * w)
                    .unwrap_or_else(Rat::zero);
                left + up
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn whitney2_row(m: u32, r: &Rat, n: usize) -> Vec<Rat> {
    whitney2_rows(m, r, n).pop().expect("at least row 0")
}

/// Row `n` of `W_{m,r}` extracted from `e^(rz) ((e^(mz)-1)/m)^k / k!`.
pub fn whitney2_row_egf(m: u32, r: &Rat, n: usize) -> Vec<Rat> {
    let base = Egf::exp_linear(r, n);
    let step = Egf::expm1_scaled(&m_rat(m), n);
    column_extract(&base, &step, n)
}

/// `n!/k! [t^n] g f^k` for `k = 0..=n`.
fn column_extract(g: &Egf, f: &Egf, n: usize) -> Vec<Rat> {
    let mut col = g.clone();
    let mut row = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k > 0 {
            col = egf_mul(&col, f).scale(&int(k as i64).recip());
        }
        row.push(col.coeff(n).clone());
    }
    row
}

/// Rows `0..=n` of the first-kind triangle from the factor recurrence
/// `w(n+1,k) = w(n,k-1) - (r + mn) w(n,k)`.
///
/// The definition is the generating function (see [`whitney1_row_egf`]); this
/// recurrence is the fast path and is tested against it.
pub fn whitney1_rows(m: u32, r: &Rat, n: usize) -> Vec<Vec<Rat>> {
    let m = m_rat(m);
    let mut rows = vec![vec![Rat::one()]];
    for i in 0..n {
        let prev = &rows[i];
        let factor = r + &m * int(i as i64);
        let row = (0..=i + 1)
            .map(|k| {
                let left = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    Rat::zero()
                };
                let up = prev.get(k).map(|w| &factor * w).unwrap_or_else(Rat::zero);
                left - up
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn whitney1_row(m: u32, r: &Rat, n: usize) -> Vec<Rat> {
    whitney1_rows(m, r, n).pop().expect("at least row 0")
}

/// Row `n` of `w_{m,r}` extracted from `(1+mz)^(-r/m) (ln(1+mz)/m)^k / k!`.
pub fn whitney1_row_egf(m: u32, r: &Rat, n: usize) -> Vec<Rat> {
    let mm = m_rat(m);
    let base = egf_pow(&Egf::affine(&mm, n), &(-r / &mm)).expect("constant term is 1");
    column_extract(&base, &Egf::log1p_scaled(&mm, n), n)
}

/// `S^[m](n,k) = S^[m](n-1,k-1) + km S^[m](n-1,k)`.
pub fn m_stirling2_rows(m: u32, n: usize) -> Vec<Vec<Rat>> {
    let m = m_rat(m);
    let mut rows = vec![vec![Rat::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let row = (0..=i)
            .map(|k| {
                let left = if k > 0 {
                    prev[k - 1].clone()
                } else {
                    Rat::zero()
                };
                let up = prev
                    .get(k)
                    .map(|s| int(k as i64) * &m * s)
                    .unwrap_or_else(Rat::zero);
                left + up
            })
            .collect();
        rows.push(row);
    }
    rows
}

pub fn m_stirling2_row(m: u32, n: usize) -> Vec<Rat> {
    m_stirling2_rows(m, n).pop().expect("at least row 0")
}

/// Power-basis coefficients of `x(x-m)...(x-(n-1)m)`.
pub fn m_stirling1_row(m: u32, n: usize) -> Vec<Rat> {
    let mut c = stepped_product(n, &m_rat(m), &Rat::zero()).into_coeffs();
    c.resize(n + 1, Rat::zero());
    c
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleKind {
    Whitney2,
    Whitney1,
    MStirling2,
    MStirling1,
    /// Connection constants between two Sheffer families.
    Connection,
}

impl TriangleKind {
    pub fn name(&self) -> &'static str {
        match self {
            TriangleKind::Whitney2 => "whitney2",
            TriangleKind::Whitney1 => "whitney1",
            TriangleKind::MStirling2 => "mstirling2",
            TriangleKind::MStirling1 => "mstirling1",
            TriangleKind::Connection => "connection",
        }
    }
}

impl FromStr for TriangleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "whitney2" => TriangleKind::Whitney2,
            "whitney1" => TriangleKind::Whitney1,
            "mstirling2" => TriangleKind::MStirling2,
            "mstirling1" => TriangleKind::MStirling1,
            "connection" => TriangleKind::Connection,
            _ => return Err(Error::Parse(format!("unknown triangle kind `{s}`"))),
        })
    }
}

/// Lower-triangular exact array with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub kind: TriangleKind,
    pub m: Option<u32>,
    pub r: Option<Rat>,
    rows: Vec<Vec<Rat>>,
}

impl Triangle {
    /// Builds rows `0..=n`.
    pub fn build(kind: TriangleKind, m: u32, r: &Rat, n: usize) -> Result<Triangle> {
        check_m(m)?;
        let (rows, r) = match kind {
            TriangleKind::Whitney2 => (whitney2_rows(m, r, n), Some(r.clone())),
            TriangleKind::Whitney1 => (whitney1_rows(m, r, n), Some(r.clone())),
            TriangleKind::MStirling2 => (m_stirling2_rows(m, n), None),
            TriangleKind::MStirling1 => ((0..=n).map(|i| m_stirling1_row(m, i)).collect(), None),
            TriangleKind::Connection => {
                return Err(Error::InvalidParameter(
                    "connection triangles come from riordan::connection_constants".into(),
                ))
            }
        };
        Ok(Triangle {
            kind,
            m: Some(m),
            r,
            rows,
        })
    }

    pub fn whitney2(m: u32, r: &Rat, n: usize) -> Triangle {
        Triangle::build(TriangleKind::Whitney2, m, r, n).expect("m must be positive")
    }

    pub fn whitney1(m: u32, r: &Rat, n: usize) -> Triangle {
        Triangle::build(TriangleKind::Whitney1, m, r, n).expect("m must be positive")
    }

    /// Wraps precomputed rows; row `i` must have length `i + 1`.
    pub fn from_rows(
        kind: TriangleKind,
        m: Option<u32>,
        r: Option<Rat>,
        rows: Vec<Vec<Rat>>,
    ) -> Result<Triangle> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    i + 1
                )));
            }
        }
        Ok(Triangle { kind, m, r, rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rat] {
        &self.rows[n]
    }

    /// Entry `(n, k)`, zero above the diagonal. Panics if `n` is past the last row.
    pub fn get(&self, n: usize, k: usize) -> Rat {
        self.rows[n].get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// One row per line, entries `p/q` separated by commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(fmt_rat).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn rows_from_csv(text: &str) -> Result<Vec<Vec<Rat>>> {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(parse_rat).collect())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TriangleJson::from(self)).expect("plain strings serialize")
    }

    pub fn from_json(s: &str) -> Result<Triangle> {
        let j: TriangleJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        j.try_into()
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(fmt_rat).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for (n, row) in cells.iter().enumerate() {
            write!(f, "{n:>3} |")?;
            for c in row {
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// JSON form: `{"kind": "whitney2", "m": 2, "r": "3", "rows": [["1"], ["3","1"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleJson {
    pub kind: TriangleKind,
    pub m: Option<u32>,
    pub r: Option<String>,
    pub rows: Vec<Vec<String>>,
}

impl From<&Triangle> for TriangleJson {
    fn from(t: &Triangle) -> Self {
        TriangleJson {
            kind: t.kind,
            m: t.m,
            r: t.r.as_ref().map(fmt_rat),
            rows: t
                .rows
                .iter()
                .map(|row| row.iter().map(fmt_rat).collect())
                .collect(),
        }
    }
}

impl TryFrom<TriangleJson> for Triangle {
    type Error = Error;
    fn try_from(j: TriangleJson) -> Result<Triangle> {
        let rows = j
            .rows
            .iter()
            .map(|row| row.iter().map(|s| parse_rat(s)).collect())
            .collect::<Result<Vec<Vec<Rat>>>>()?;
        let r = j.r.as_deref().map(parse_rat).transpose()?;
        Triangle::from_rows(j.kind, j.m, r, rows)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `T_n^[m](x) = sum_k S^[m](n,k) x^k`.
    TouchardM,
    /// `x(x-m)...(x-(n-1)m)`.
    TouchardMHat,
    /// `sum_k W_{m,r}(n,k) x^k`.
    Dowling,
    /// `(x-r)(x-r-m)...(x-r-(n-1)m)`.
    DowlingHat,
    Bernoulli,
    Euler,
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "touchard" => FamilyKind::TouchardM,
            "touchard-hat" => FamilyKind::TouchardMHat,
            "dowling" => FamilyKind::Dowling,
            "dowling-hat" => FamilyKind::DowlingHat,
            "bernoulli" => FamilyKind::Bernoulli,
            "euler" => FamilyKind::Euler,
            _ => return Err(Error::Parse(format!("unknown polynomial family `{s}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub m: u32,
    pub r: Rat,
}

impl FamilyParams {
    pub fn new(m: u32, r: Rat) -> Self {
        FamilyParams { m, r }
    }
}

/// EGF coefficients of `t/(e^t - 1)`, indices `0..=n`.
fn bernoulli_kernel(n: usize) -> Egf {
    Egf::expm1_scaled(&Rat::one(), n + 1)
        .div_t()
        .and_then(|e| e.recip())
        .expect("(e^t-1)/t has constant term 1")
}

/// EGF coefficients of `2/(e^t + 1)`, indices `0..=n`.
fn euler_kernel(n: usize) -> Egf {
    let half = Egf::exp_linear(&Rat::one(), n)
        .add(&Egf::one(n))
        .scale(&crate::rat::frac(1, 2));
    half.recip().expect("(e^t+1)/2 has constant term 1")
}

/// Appell polynomial `sum_k C(n,k) a_(n-k) x^k` of a kernel series.
fn appell(kernel: &Egf, n: usize) -> Poly {
    Poly::new(
        (0..=n)
            .map(|k| binomial(n, k) * kernel.coeff(n - k))
            .collect(),
    )
}

pub fn family(kind: FamilyKind, params: &FamilyParams, n: usize) -> Result<Poly> {
    check_m(params.m)?;
    let m = m_rat(params.m);
    Ok(match kind {
        FamilyKind::TouchardM => Poly::new(m_stirling2_row(params.m, n)),
        FamilyKind::TouchardMHat => stepped_product(n, &m, &Rat::zero()),
        FamilyKind::Dowling => Poly::new(whitney2_row(params.m, &params.r, n)),
        FamilyKind::DowlingHat => stepped_product(n, &m, &params.r),
        FamilyKind::Bernoulli => appell(&bernoulli_kernel(n), n),
        FamilyKind::Euler => appell(&euler_kernel(n), n),
    })
}

/// A family `p_0..p_N` with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFamily {
    pub kind: FamilyKind,
    pub params: FamilyParams,
    pub polys: Vec<Poly>,
}

impl PolyFamily {
    pub fn build(kind: FamilyKind, params: FamilyParams, max_n: usize) -> Result<Self> {
        let polys = (0..=max_n)
            .map(|n| family(kind, &params, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(PolyFamily {
            kind,
            params,
            polys,
        })
    }

    pub fn get(&self, n: usize) -> &Poly {
        &self.polys[n]
    }
}

pub fn touchard(m: u32, n: usize) -> Poly {
    Poly::new(m_stirling2_row(m, n))
}

pub fn touchard_hat(m: u32, n: usize) -> Poly {
    stepped_product(n, &m_rat(m), &Rat::zero())
}

pub fn dowling(m: u32, r: &Rat, n: usize) -> Poly {
    Poly::new(whitney2_row(m, r, n))
}

pub fn dowling_hat(m: u32, r: &Rat, n: usize) -> Poly {
    stepped_product(n, &m_rat(m), r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeqKind {
    BernoulliNum,
    EulerNumAtZero,
    Cauchy1,
    Bell,
}

/// Cauchy numbers `c_n = int_0^1 x(x-1)...(x-n+1) dx`, `n = 0..=max`.
pub fn cauchy_numbers_integral(max: usize) -> Vec<Rat> {
    (0..=max)
        .map(|n| Poly::falling_factorial(n).integral().eval(&Rat::one()))
        .collect()
}

/// Cauchy numbers as EGF coefficients of `t / ln(1+t)`.
pub fn cauchy_numbers_egf(max: usize) -> Vec<Rat> {
    Egf::log1p_scaled(&Rat::one(), max + 1)
        .div_t()
        .and_then(|e| e.recip())
        .expect("ln(1+t)/t has constant term 1")
        .coeffs()
        .to_vec()
}

/// Values at indices `0..=max`.
pub fn classical_seq(kind: SeqKind, max: usize) -> Vec<Rat> {
    match kind {
        SeqKind::BernoulliNum => bernoulli_kernel(max).coeffs().to_vec(),
        SeqKind::EulerNumAtZero => euler_kernel(max).coeffs().to_vec(),
        SeqKind::Cauchy1 => {
            let by_integral = cauchy_numbers_integral(max);
            assert_eq!(
                by_integral,
                cauchy_numbers_egf(max),
                "Cauchy numbers: integral and generating-function routes disagree"
            );
            by_integral
        }
        SeqKind::Bell => (0..=max)
            .map(|n| touchard(1, n).eval(&Rat::one()))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, pow};

    /// Brute-force S(n, k): count restricted growth strings with k distinct values.
    fn stirling2_brute(n: usize, k: usize) -> u64 {
        fn go(i: usize, n: usize, blocks: usize, k: usize) -> u64 {
            if i == n {
                return (blocks == k) as u64;
            }
            (0..=blocks)
                .map(|b| go(i + 1, n, blocks.max(b + 1), k))
                .sum()
        }
        go(0, n, 0, k)
    }

    #[test]
    fn whitney2_examples() {
        assert_eq!(whitney2_row(2, &int(3), 2), vec![int(9), int(8), int(1)]);
        assert_eq!(
            whitney2_row(1, &int(0), 5)[2],
            int(stirling2_brute(5, 2) as i64)
        );
        for n in 0..8 {
            assert_eq!(whitney2_row(3, &frac(1, 2), n)[n], int(1));
        }
    }

    #[test]
    fn whitney2_recurrence_matches_egf() {
        for m in 1..=3 {
            for r in [int(0), int(2), frac(-5, 3)] {
                for n in 0..=10 {
                    assert_eq!(whitney2_row(m, &r, n), whitney2_row_egf(m, &r, n));
                }
            }
        }
    }

    #[test]
    fn whitney2_entries_are_nonnegative_integers() {
        for m in 1..=3 {
            for r in 0..=3 {
                let t = Triangle::whitney2(m, &int(r), 10);
                for (n, row) in t.rows().iter().enumerate() {
                    assert_eq!(row[0], pow(&int(r), n));
                    assert_eq!(row[n], int(1));
                    assert!(row.iter().all(crate::rat::is_nonneg_integer));
                }
            }
        }
    }

    #[test]
    fn whitney1_examples() {
        let r = frac(7, 2);
        assert_eq!(whitney1_row(2, &r, 1), vec![-r.clone(), int(1)]);
        assert_eq!(whitney1_row(2, &int(3), 2), vec![int(15), int(-8), int(1)]);
        let w2 = whitney2_row(2, &int(3), 2);
        let dot: Rat = (0..=2)
            .map(|i| &w2[i] * &whitney1_row(2, &int(3), i)[0])
            .sum();
        assert!(dot.is_zero());
    }

    #[test]
    fn whitney1_recurrence_matches_egf() {
        for m in 1..=3 {
            for r in [int(0), int(1), int(3), frac(2, 3)] {
                for n in 0..=12 {
                    assert_eq!(
                        whitney1_row(m, &r, n),
                        whitney1_row_egf(m, &r, n),
                        "m={m} r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn m_stirling_examples() {
        assert_eq!(m_stirling2_row(2, 2)[1], int(2));
        assert_eq!(m_stirling2_row(2, 3), vec![int(0), int(4), int(6), int(1)]);
        assert_eq!(m_stirling1_row(2, 2), vec![int(0), int(-2), int(1)]);
        assert_eq!(m_stirling1_row(2, 3), vec![int(0), int(8), int(-6), int(1)]);
        for m in 1..=3 {
            for n in 0..=9 {
                assert_eq!(m_stirling2_row(m, n), whitney2_row(m, &int(0), n));
                assert_eq!(m_stirling1_row(m, n)[n], int(1));
            }
        }
    }

    #[test]
    fn scaling_law_against_brute_force() {
        for m in 1..=3u32 {
            for n in 0..=9usize {
                let s2 = m_stirling2_row(m, n);
                for k in 0..=n {
                    let brute = int(stirling2_brute(n, k) as i64);
                    assert_eq!(s2[k], pow(&int(m as i64), n - k) * brute);
                }
            }
        }
    }

    #[test]
    fn family_examples() {
        let p = FamilyParams::new(2, int(3));
        assert_eq!(family(FamilyKind::Dowling, &p, 0).unwrap(), Poly::one());
        assert_eq!(
            family(FamilyKind::Dowling, &p, 1).unwrap(),
            Poly::from_ints(&[3, 1])
        );
        let b2 = family(FamilyKind::Bernoulli, &p, 2).unwrap();
        assert_eq!(b2, Poly::new(vec![frac(1, 6), int(-1), int(1)]));
        let e1 = family(FamilyKind::Euler, &p, 1).unwrap();
        assert_eq!(e1, Poly::new(vec![frac(-1, 2), int(1)]));
        let t3 = family(FamilyKind::TouchardM, &FamilyParams::new(1, int(0)), 3).unwrap();
        assert_eq!(t3.eval(&int(1)), int(5));
        for kind in [
            FamilyKind::TouchardM,
            FamilyKind::TouchardMHat,
            FamilyKind::Dowling,
            FamilyKind::DowlingHat,
        ] {
            let fam = PolyFamily::build(kind, FamilyParams::new(3, frac(1, 2)), 7).unwrap();
            for (n, q) in fam.polys.iter().enumerate() {
                assert_eq!(q.degree(), Some(n));
                assert_eq!(q.leading_coeff(), int(1));
            }
        }
    }

    #[test]
    fn classical_sequences() {
        let c = classical_seq(SeqKind::Cauchy1, 5);
        assert_eq!(&c[..4], &[int(1), frac(1, 2), frac(-1, 6), frac(1, 4)]);
        let b = classical_seq(SeqKind::BernoulliNum, 6);
        assert_eq!(&b[..4], &[int(1), frac(-1, 2), frac(1, 6), int(0)]);
        let e = classical_seq(SeqKind::EulerNumAtZero, 3);
        assert_eq!(e, vec![int(1), frac(-1, 2), int(0), frac(1, 4)]);
        let bell = classical_seq(SeqKind::Bell, 6);
        assert_eq!(bell, [1, 1, 2, 5, 15, 52, 203].map(int).to_vec());
    }

    #[test]
    fn csv_and_json_round_trip() {
        let t = Triangle::whitney1(2, &frac(3, 2), 6);
        let rows = Triangle::rows_from_csv(&t.to_csv()).unwrap();
        assert_eq!(rows, t.rows());
        assert_eq!(Triangle::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(
            Triangle::whitney2(2, &int(3), 2).to_csv(),
            "1\n3,1\n9,8,1\n"
        );
        assert!(Triangle::from_rows(TriangleKind::Whitney2, None, None, vec![vec![]]).is_err());
    }
}
