//! Exponential Riordan arrays, their group law, A- and Z-sequences, and
//! connection constants between Sheffer families.
//!
//! Two normalizations live side by side and are kept apart by type:
//! [`ExpRiordan`] (column `k` has EGF `g f^k / k!`) and [`OrdinaryRiordan`]
//! (column `k` has OGF `g f^k`). The A-sequence is reported EGF-normalized,
//! the Z-sequence of an ordinary array ordinary-normalized.

use num_traits::{One, Zero};

use crate::egf::{egf_compose, egf_mul, egf_reverse, Egf};
use crate::error::{Error, Result};
use crate::matrix::square_from_rows;
use crate::poly::Poly;
use crate::rat::{factorial, fmt_rat, int, Rat};
use crate::triangles::{Triangle, TriangleKind};

/// `<g, f>` with `g(0) != 0`, `f(0) = 0`, `f'(0) != 0`, truncated at a common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpRiordan {
    g: Egf,
    f: Egf,
}

fn validate_pair(g: &Egf, f: &Egf) -> Result<()> {
    if g.coeff(0).is_zero() {
        return Err(Error::NotInvertible("g(0) must be nonzero".into()));
    }
    if !f.coeff(0).is_zero() {
        return Err(Error::NotInvertible(format!(
            "f(0) must be zero, found {}",
            fmt_rat(f.coeff(0))
        )));
    }
    if f.order() == 0 || f.coeff(1).is_zero() {
        return Err(Error::NotInvertible("f'(0) must be nonzero".into()));
    }
    Ok(())
}

impl ExpRiordan {
    pub fn new(g: Egf, f: Egf) -> Result<Self> {
        validate_pair(&g, &f)?;
        let order = g.order().min(f.order());
        Ok(ExpRiordan {
            g: g.truncate(order),
            f: f.truncate(order),
        })
    }

    pub fn identity(order: usize) -> Self {
        ExpRiordan::new(Egf::one(order), Egf::t(order)).expect("valid pair")
    }

    /// `W_2 = <e^(rt), (e^(mt)-1)/m>`, the second-kind r-Whitney array.
    pub fn whitney2(m: u32, r: &Rat, order: usize) -> Self {
        ExpRiordan::new(
            Egf::exp_linear(r, order),
            Egf::expm1_scaled(&int(m as i64), order),
        )
        .expect("valid pair")
    }

    /// `W_1 = <(1+mt)^(-r/m), ln(1+mt)/m>`, the first-kind r-Whitney array.
    pub fn whitney1(m: u32, r: &Rat, order: usize) -> Self {
        let mm = int(m as i64);
        let g = crate::egf::egf_pow(&Egf::affine(&mm, order), &(-r / &mm)).expect("g(0) = 1");
        ExpRiordan::new(g, Egf::log1p_scaled(&mm, order)).expect("valid pair")
    }

    pub fn g(&self) -> &Egf {
        &self.g
    }

    pub fn f(&self) -> &Egf {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// Column `k` as an EGF, `g f^k / k!`.
    pub fn column(&self, k: usize) -> Egf {
        (1..=k).fold(self.g.clone(), |col, i| {
            egf_mul(&col, &self.f).scale(&int(i as i64).recip())
        })
    }

    /// Rows `0..=order` as a lower-triangular list.
    pub fn rows(&self) -> Vec<Vec<Rat>> {
        let n = self.order();
        let mut rows: Vec<Vec<Rat>> = (0..=n).map(|i| Vec::with_capacity(i + 1)).collect();
        let mut col = self.g.clone();
        for k in 0..=n {
            if k > 0 {
                col = egf_mul(&col, &self.f).scale(&int(k as i64).recip());
            }
            for (i, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(col.coeff(i).clone());
            }
        }
        rows
    }

    /// Full square matrix of size `order + 1`.
    pub fn matrix(&self) -> Vec<Vec<Rat>> {
        square_from_rows(&self.rows())
    }

    pub fn to_triangle(&self, kind: TriangleKind) -> Triangle {
        Triangle::from_rows(kind, None, None, self.rows()).expect("rows are lower triangular")
    }

    /// The array `<g', f>` used by the auxiliary row recurrences. Loses one order.
    pub fn with_g_derivative(&self) -> Egf {
        self.g.derivative()
    }
}

/// `(n!/k!) [t^n] g f^k`, zero above the diagonal.
pub fn entry(r: &ExpRiordan, n: usize, k: usize) -> Result<Rat> {
    if n > r.order() || k > r.order() {
        return Err(Error::OrderExceeded {
            n,
            k,
            order: r.order(),
        });
    }
    if k > n {
        return Ok(Rat::zero());
    }
    Ok(r.column(k).coeff(n).clone())
}

/// `<g1, f1> * <g2, f2> = <g1 (g2 o f1), f2 o f1>`.
pub fn riordan_mul(a: &ExpRiordan, b: &ExpRiordan) -> Result<ExpRiordan> {
    let g = egf_mul(&a.g, &egf_compose(&b.g, &a.f)?);
    let f = egf_compose(&b.f, &a.f)?;
    ExpRiordan::new(g, f)
}

/// `<g, f>^{-1} = <1 / (g o fbar), fbar>`.
pub fn riordan_inverse(r: &ExpRiordan) -> Result<ExpRiordan> {
    let fbar = egf_reverse(&r.f)?;
    let g = egf_compose(&r.g, &fbar)?.recip()?;
    ExpRiordan::new(g, fbar)
}

/// A-sequence in EGF normalization: coefficients of `t / fbar(t)`.
///
/// Row recurrence: `d(n+1,k+1) = sum_j (n+1)/(k+1) C(k+j,j) a_j d(n,k+j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpASequence(pub Vec<Rat>);

impl ExpASequence {
    /// Ordinary coefficients `a_j / j!`, the form used by ordinary arrays.
    pub fn to_ordinary(&self) -> Vec<Rat> {
        self.0
            .iter()
            .enumerate()
            .map(|(j, a)| a / factorial(j))
            .collect()
    }
}

/// Z-sequence of an ordinary array, ordinary-normalized:
/// `g = g(0) / (1 - t Z(f))`, so `d(n+1,0) = sum_j z_j d(n,j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinaryZSequence(pub Vec<Rat>);

/// Z-sequence of an exponential array, EGF-normalized: coefficients of
/// `g'(fbar) / g(fbar)`, so `d(n+1,0) = sum_j z_j d(n,j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpZSequence(pub Vec<Rat>);

/// The A- and Z-sequences characterizing an ordinary array together with `d(0,0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqAZ {
    pub a: ExpASequence,
    pub z: OrdinaryZSequence,
}

/// Indices `0..=j_max`; needs `j_max < order` since `t/fbar` loses one order.
pub fn a_sequence(r: &ExpRiordan, j_max: usize) -> Result<ExpASequence> {
    a_sequence_of_f(&r.f, j_max)
}

fn a_sequence_of_f(f: &Egf, j_max: usize) -> Result<ExpASequence> {
    if j_max >= f.order() {
        return Err(Error::OrderExceeded {
            n: j_max,
            k: 0,
            order: f.order().saturating_sub(1),
        });
    }
    let fbar = egf_reverse(f)?;
    let a = fbar.div_t()?.recip()?;
    Ok(ExpASequence(a.coeffs()[..=j_max].to_vec()))
}

/// Exponential-array Z-sequence, indices `0..=j_max` (`j_max < order`).
pub fn exp_z_sequence(r: &ExpRiordan, j_max: usize) -> Result<ExpZSequence> {
    if j_max >= r.order() {
        return Err(Error::OrderExceeded {
            n: j_max,
            k: 0,
            order: r.order().saturating_sub(1),
        });
    }
    let fbar = egf_reverse(&r.f)?;
    let gp = egf_compose(&r.g.derivative(), &fbar.truncate(r.order() - 1))?;
    let gf = egf_compose(&r.g, &fbar)?.truncate(r.order() - 1);
    let z = egf_mul(&gp, &gf.recip()?);
    Ok(ExpZSequence(z.coeffs()[..=j_max].to_vec()))
}

/// `(g, f)` stored by ordinary coefficients; entry `(n,k) = [t^n] g f^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinaryRiordan {
    g: Vec<Rat>,
    f: Vec<Rat>,
}

impl OrdinaryRiordan {
    /// Ordinary coefficient lists of equal length `order + 1`.
    pub fn new(g: Vec<Rat>, f: Vec<Rat>) -> Result<Self> {
        let order = g.len().min(f.len());
        if order == 0 {
            return Err(Error::InvalidParameter("empty series".into()));
        }
        let (g, f): (Vec<Rat>, Vec<Rat>) = (g[..order].to_vec(), f[..order].to_vec());
        validate_pair(&Egf::from_ordinary(&g), &Egf::from_ordinary(&f))?;
        Ok(OrdinaryRiordan { g, f })
    }

    /// The same pair of functions as an exponential array, reread with
    /// ordinary column generating functions. The matrices differ in general.
    pub fn from_exp_pair(r: &ExpRiordan) -> Self {
        OrdinaryRiordan {
            g: r.g.to_ordinary(),
            f: r.f.to_ordinary(),
        }
    }

    pub fn order(&self) -> usize {
        self.g.len() - 1
    }

    pub fn g(&self) -> &[Rat] {
        &self.g
    }

    pub fn f(&self) -> &[Rat] {
        &self.f
    }

    pub fn rows(&self) -> Vec<Vec<Rat>> {
        let n = self.order();
        let mut rows: Vec<Vec<Rat>> = (0..=n).map(|i| Vec::with_capacity(i + 1)).collect();
        let mut col = Poly::new(self.g.clone());
        let f = Poly::new(self.f.clone());
        for k in 0..=n {
            if k > 0 {
                col = &col * &f;
            }
            for (i, row) in rows.iter_mut().enumerate().skip(k) {
                row.push(col.coeff(i));
            }
        }
        rows
    }

    pub fn sequences(&self, j_max: usize) -> Result<SeqAZ> {
        Ok(SeqAZ {
            a: a_sequence_of_f(&Egf::from_ordinary(&self.f), j_max)?,
            z: z_sequence(self, j_max)?,
        })
    }
}

/// Solves `g = g(0) / (1 - t Z(f))` for `Z`, indices `0..=j_max` (`j_max < order`).
///
/// `Z(f(t)) = (1 - g(0)/g(t)) / t`, then `Z = that o fbar`.
pub fn z_sequence(r: &OrdinaryRiordan, j_max: usize) -> Result<OrdinaryZSequence> {
    let g0 = &r.g[0];
    if g0.is_zero() {
        return Err(Error::NotSolvable("g(0) = 0".into()));
    }
    if j_max >= r.order() {
        return Err(Error::OrderExceeded {
            n: j_max,
            k: 0,
            order: r.order().saturating_sub(1),
        });
    }
    let g = Egf::from_ordinary(&r.g);
    let order = g.order();
    let inner = Egf::one(order).sub(&g.recip()?.scale(g0));
    let z_of_f = inner.div_t()?;
    let fbar = egf_reverse(&Egf::from_ordinary(&r.f))?;
    let z = egf_compose(&z_of_f, &fbar)?;
    Ok(OrdinaryZSequence(z.to_ordinary()[..=j_max].to_vec()))
}

/// A pair `(g, f)` defining the Sheffer family with generating function
/// `e^(x fbar(t)) / g(fbar(t))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShefferPair {
    pub g: Egf,
    pub f: Egf,
}

impl ShefferPair {
    pub fn new(g: Egf, f: Egf) -> Result<Self> {
        validate_pair(&g, &f)?;
        Ok(ShefferPair { g, f })
    }

    /// `((e^t - 1)/t, t)`.
    pub fn bernoulli(order: usize) -> Self {
        let g = Egf::expm1_scaled(&Rat::one(), order + 1)
            .div_t()
            .expect("zero constant term");
        ShefferPair::new(g, Egf::t(order)).expect("valid pair")
    }

    /// `((e^t + 1)/2, t)`.
    pub fn euler(order: usize) -> Self {
        let g = Egf::exp_linear(&Rat::one(), order)
            .add(&Egf::one(order))
            .scale(&crate::rat::frac(1, 2));
        ShefferPair::new(g, Egf::t(order)).expect("valid pair")
    }

    /// `((1+mt)^(-r/m), ln(1+mt)/m)`, the r-Dowling polynomials.
    pub fn dowling(m: u32, r: &Rat, order: usize) -> Self {
        let w1 = ExpRiordan::whitney1(m, r, order);
        ShefferPair { g: w1.g, f: w1.f }
    }

    /// `(1, ln(1+mt)/m)`, the [m]-Touchard polynomials.
    pub fn touchard(m: u32, order: usize) -> Self {
        ShefferPair::dowling(m, &Rat::zero(), order)
    }

    pub fn order(&self) -> usize {
        self.g.order().min(self.f.order())
    }

    /// The coefficient array `<1/g(fbar), fbar>` of the family.
    pub fn coefficient_array(&self) -> Result<ExpRiordan> {
        riordan_inverse(&ExpRiordan::new(self.g.clone(), self.f.clone())?)
    }

    /// Members `s_0..s_order` in the power basis.
    pub fn polys(&self) -> Result<Vec<Poly>> {
        Ok(self
            .coefficient_array()?
            .rows()
            .into_iter()
            .map(Poly::new)
            .collect())
    }
}

/// Constants with `expanded_n(x) = sum_k a(n,k) basis_k(x)`, `n <= n_max`.
///
/// With `basis` Sheffer for `(g, f)` and `expanded` for `(h, l)`, the
/// constants form the array `<g(lbar)/h(lbar), f(lbar)>`.
pub fn connection_constants(
    expanded: &ShefferPair,
    basis: &ShefferPair,
    n_max: usize,
) -> Result<Triangle> {
    if n_max > expanded.order().min(basis.order()) {
        return Err(Error::OrderExceeded {
            n: n_max,
            k: n_max,
            order: expanded.order().min(basis.order()),
        });
    }
    let lbar = egf_reverse(&expanded.l_truncated(n_max))?;
    let g = egf_compose(&basis.g.truncate(n_max), &lbar)?;
    let h = egf_compose(&expanded.g.truncate(n_max), &lbar)?;
    let arr = ExpRiordan::new(
        egf_mul(&g, &h.recip()?),
        egf_compose(&basis.f.truncate(n_max), &lbar)?,
    )?;
    Triangle::from_rows(TriangleKind::Connection, None, None, arr.rows())
}

impl ShefferPair {
    fn l_truncated(&self, n: usize) -> Egf {
        self.f.truncate(n)
    }
}
