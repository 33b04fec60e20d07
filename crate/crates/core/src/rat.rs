//! Exact rational scalars and a few integer-combinatorics helpers.
//!
//! `Rat` is `num_rational::BigRational`, which is always kept in lowest terms
//! with a positive denominator. Its `Display` already renders `p/q` (and
//! plain `p` for integers), which is the textual form used in every output
//! format of this crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    Rat::from_str(s).map_err(|_| Error::Parse(format!("not a rational `{s}`")))
}

/// `p/q` rendering; integers print as `p`.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// `base^exp` with `0^0 = 1`.
pub fn pow(base: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

pub fn factorial(n: usize) -> Rat {
    (1..=n).fold(Rat::one(), |acc, i| acc * int(i as i64))
}

/// Binomial coefficient with `C(n, k) = 0` for `k > n`.
pub fn binomial(n: usize, k: usize) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(acc)
}

/// Row-major Pascal table `table[n][k] = C(n, k)` for `n <= max`.
pub fn binomial_table(max: usize) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(max + 1);
    for n in 0..=max {
        let mut row = vec![Rat::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Converts a rational known to be a small nonnegative integer.
pub fn to_usize(r: &Rat) -> Option<usize> {
    use num_traits::ToPrimitive;
    if is_nonneg_integer(r) {
        r.to_integer().to_usize()
    } else {
        None
    }
}
