//! Shift-invariant operators `sum_k b_k D^k / k!` acting on polynomials.

use num_traits::Zero;

use crate::egf::{egf_pow, egf_reverse, Egf};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{factorial, Rat};

/// An operator given by a series in the derivative `D = d/dx`.
///
/// The EGF coefficients of the series are the `b_k`. Applying it to a
/// polynomial of degree `d` uses exactly `b_0..b_d`, since `D^(d+1) p = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinOp {
    series: Egf,
}

impl LinOp {
    pub fn new(series: Egf) -> Self {
        LinOp { series }
    }

    pub fn series(&self) -> &Egf {
        &self.series
    }

    pub fn identity(order: usize) -> Self {
        LinOp::new(Egf::one(order))
    }

    /// `D`.
    pub fn derivative(order: usize) -> Self {
        LinOp::new(Egf::t(order))
    }

    /// Shift `E^a p(x) = p(x + a)`, i.e. `e^(aD)`.
    pub fn shift(a: &Rat, order: usize) -> Self {
        LinOp::new(Egf::exp_linear(a, order))
    }

    /// Forward difference `(E^m - I)/m = (e^(mD) - 1)/m`.
    pub fn scaled_difference(m: &Rat, order: usize) -> Self {
        LinOp::new(Egf::expm1_scaled(m, order))
    }

    /// `ln(1 + mD)^(1/m)`, the compositional inverse of the difference symbol.
    pub fn scaled_log(m: &Rat, order: usize) -> Result<Self> {
        Ok(LinOp::new(egf_reverse(&Egf::expm1_scaled(m, order))?))
    }

    /// `(1 + mD)^q`.
    pub fn binomial_power(m: &Rat, q: &Rat, order: usize) -> Result<Self> {
        Ok(LinOp::new(egf_pow(&Egf::affine(m, order), q)?))
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        apply_linop(self, p)
    }
}

pub fn apply_linop(op: &LinOp, p: &Poly) -> Result<Poly> {
    let Some(d) = p.degree() else {
        return Ok(Poly::zero());
    };
    if op.series.order() < d {
        return Err(Error::SeriesTooShort {
            needed: d,
            available: op.series.order(),
        });
    }
    let mut out = Poly::zero();
    let mut deriv = p.clone();
    for k in 0..=d {
        let b = op.series.coeff(k);
        if !b.is_zero() {
            out = &out + &deriv.scale(&(b / factorial(k)));
        }
        deriv = deriv.derivative();
    }
    Ok(out)
}

/// `p(x) -> x p(x)`; not shift-invariant, used by the binomial-type recurrences.
pub fn mul_x(p: &Poly) -> Poly {
    p * &Poly::x()
}

/// `(1 + mD) p`.
pub fn one_plus_m_d(m: &Rat, p: &Poly) -> Poly {
    p + &p.derivative().scale(m)
}
