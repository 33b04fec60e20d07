//! Dense univariate polynomials over `Rat`.

use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rat::{binomial, factorial, int, Rat};

/// Dense polynomial, `coeffs[i]` is the coefficient of `x^i`.
///
/// Trailing zeros are never stored, so the zero polynomial is the empty
/// vector and structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    /// `x - a`.
    pub fn linear_root(a: &Rat) -> Self {
        Poly::new(vec![-a.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Poly {
        let mut out = vec![Rat::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c / int(i as i64 + 1)),
        );
        Poly::new(out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// `p(q(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * inner) + &Poly::constant(c.clone())
        })
    }

    /// `p(x + a)` by direct binomial expansion of every monomial.
    pub fn shifted(&self, a: &Rat) -> Poly {
        let mut out = vec![Rat::zero(); self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut a_pow = Rat::one();
            for j in (0..=i).rev() {
                out[j] += c * binomial(i, j) * &a_pow;
                a_pow *= a;
            }
        }
        Poly::new(out)
    }

    /// Quotient and remainder of Euclidean division by a nonzero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= d {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); n - d];
        for i in (0..n - d).rev() {
            let q = &rem[i + d] / &lead;
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * c;
                }
            }
            quot[i] = q;
        }
        rem.truncate(d);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Falling factorial `x(x-1)...(x-k+1)`.
    pub fn falling_factorial(k: usize) -> Poly {
        stepped_product(k, &Rat::one(), &Rat::zero())
    }
}

/// Coefficients `c_0..c_d` with `p(x) = sum_k c_k x^(k falling)`.
///
/// Computed from forward differences at zero, `c_k = (Delta^k p)(0) / k!`,
/// which never touches any number triangle.
pub fn falling_basis_expand(p: &Poly) -> Vec<Rat> {
    let Some(d) = p.degree() else {
        return vec![Rat::zero()];
    };
    let mut values: Vec<Rat> = (0..=d).map(|i| p.eval(&int(i as i64))).collect();
    let mut out = Vec::with_capacity(d + 1);
    for k in 0..=d {
        out.push(&values[0] / factorial(k));
        for i in 0..values.len() - 1 {
            values[i] = &values[i + 1] - &values[i];
        }
        values.pop();
    }
    out
}

/// `sum_k c_k x^(k falling)`.
pub fn from_falling_basis(c: &[Rat]) -> Poly {
    c.iter().enumerate().fold(Poly::zero(), |acc, (k, ck)| {
        &acc + &Poly::falling_factorial(k).scale(ck)
    })
}

/// `(x - shift)(x - shift - m) ... (x - shift - (n-1)m)`; the empty product is 1.
pub fn stepped_product(n: usize, m: &Rat, shift: &Rat) -> Poly {
    (0..n).fold(Poly::one(), |acc, i| {
        &acc * &Poly::linear_root(&(shift + m * int(i as i64)))
    })
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

/// Human form, highest degree first: `x^2 - 2*x + 1/6`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// The unique polynomial of degree `< points.len()` through the given
/// points, by Lagrange's formula. Abscissas must be distinct.
pub fn interpolate(points: &[(Rat, Rat)]) -> Poly {
    let mut out = Poly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = Poly::constant(yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let denom = xi - xj;
                assert!(!denom.is_zero(), "interpolation abscissas must be distinct");
                basis = (&basis * &Poly::linear_root(xj)).scale(&denom.recip());
            }
        }
        out = &out + &basis;
    }
    out
}

/// Parses the coefficient form used by the CSV/JSON exports.
pub fn poly_from_strs<S: AsRef<str>>(items: &[S]) -> Result<Poly> {
    items
        .iter()
        .map(|s| crate::rat::parse_rat(s.as_ref()))
        .collect::<Result<Vec<_>>>()
        .map(Poly::new)
        .map_err(|e| Error::Parse(format!("polynomial coefficients: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;
    use proptest::prelude::*;

    #[test]
    fn falling_expansion_examples() {
        assert_eq!(falling_basis_expand(&Poly::one()), vec![int(1)]);
        assert_eq!(
            falling_basis_expand(&Poly::from_ints(&[0, 0, 1])),
            vec![int(0), int(1), int(1)]
        );
        // (2x+3)^2 = 4x^2 + 12x + 9
        let c = falling_basis_expand(&Poly::from_ints(&[9, 12, 4]));
        assert_eq!(c, vec![int(9), int(16), int(4)]);
        let scaled: Vec<Rat> = c
            .iter()
            .enumerate()
            .map(|(k, ck)| ck / crate::rat::pow(&int(2), k))
            .collect();
        assert_eq!(scaled, vec![int(9), int(8), int(1)]);
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let p = Poly::from_ints(&[3, 0, -2, 1]);
        let pts: Vec<(Rat, Rat)> = (-1..3).map(|x| (int(x), p.eval(&int(x)))).collect();
        assert_eq!(interpolate(&pts), p);
        assert_eq!(interpolate(&[]), Poly::zero());
    }

    #[test]
    fn stepped_product_examples() {
        assert_eq!(stepped_product(0, &int(5), &frac(1, 3)), Poly::one());
        assert_eq!(
            stepped_product(2, &int(2), &int(0)),
            Poly::from_ints(&[0, -2, 1])
        );
        let r = int(3);
        let direct = &Poly::linear_root(&r) * &Poly::linear_root(&(&r + int(1)));
        assert_eq!(stepped_product(2, &int(1), &r), direct);
        assert_eq!(stepped_product(2, &int(1), &int(0)).shifted(&-r), direct);
    }

    #[test]
    fn division_and_display() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let bern2 = Poly::new(vec![frac(1, 6), int(-1), int(1)]);
        assert_eq!(bern2.to_string(), "x^2 - x + 1/6");
        assert_eq!(Poly::from_ints(&[0, -2, 3]).to_string(), "3*x^2 - 2*x");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn integral_and_compose() {
        let p = Poly::from_ints(&[1, 2, 3]);
        assert_eq!(p.integral().derivative(), p);
        let q = Poly::from_ints(&[1, 1]);
        assert_eq!(p.compose(&q), p.shifted(&int(1)));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-20i64..=20, 0..=11).prop_map(|c| Poly::from_ints(&c))
    }

    proptest! {
        #[test]
        fn falling_basis_round_trip(p in small_poly()) {
            prop_assert_eq!(from_falling_basis(&falling_basis_expand(&p)), p);
        }

        #[test]
        fn product_degree_is_additive(p in small_poly(), q in small_poly()) {
            let prod = &p * &q;
            match (p.degree(), q.degree()) {
                (Some(a), Some(b)) => prop_assert_eq!(prod.degree(), Some(a + b)),
                _ => prop_assert!(prod.is_zero()),
            }
        }
    }
}
