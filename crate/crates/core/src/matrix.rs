//! Dense exact matrices: products and fraction-free determinants.

use num_traits::{One, Zero};

use crate::poly::Poly;
use crate::rat::Rat;

/// A commutative ring with exact division (the quotient is known to exist).
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// `self / rhs`; panics if the division is not exact.
    fn div_exact(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
}

impl ExactRing for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

impl ExactRing for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        assert!(
            r.is_zero(),
            "inexact polynomial division in Bareiss elimination"
        );
        q
    }
}

/// Determinant by Bareiss fraction-free elimination.
///
/// Every intermediate entry is a minor of the input, so all divisions are
/// exact in the entry ring. Zero pivots are handled by row swaps.
pub fn det_bareiss<T: ExactRing>(mut a: Vec<Vec<T>>) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    assert!(a.iter().all(|row| row.len() == n), "matrix must be square");
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return T::zero();
            };
            a.swap(k, swap);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Laplace expansion along the first row. Exponential time; test oracle only.
pub fn det_cofactor<T: ExactRing>(a: &[Vec<T>]) -> T {
    let n = a.len();
    if n == 0 {
        return T::one();
    }
    let mut acc = T::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = a[0][j].mul(&det_cofactor(&minor));
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

pub fn identity(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        <Rat as One>::one()
                    } else {
                        <Rat as Zero>::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !Zero::is_zero(&row[k]))
                        .map(|k| &row[k] * &b[k][j])
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Square matrix from a ragged lower-triangular row list, zero-padded.
pub fn square_from_rows(rows: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = rows.len();
    rows.iter()
        .map(|row| {
            let mut r = row.clone();
            r.resize(n, <Rat as Zero>::zero());
            r.truncate(n);
            r
        })
        .collect()
}
