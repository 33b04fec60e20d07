//! Truncated exponential generating functions over `Rat`.
//!
//! An [`Egf`] of order `N` stores `a_0..a_N` where the series is
//! `F(t) = sum_n a_n t^n / n!`. Binary operations truncate to the smaller
//! order of their inputs; nothing ever reads past `order`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::rat::{binomial_table, factorial, fmt_rat, int, parse_rat, pow, Rat};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Egf {
    coeffs: Vec<Rat>,
}

impl Egf {
    /// Takes EGF-normalized coefficients `a_0..a_N`. Panics on an empty vector.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "an Egf needs at least a_0");
        Egf { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Egf::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Builds from ordinary coefficients `[t^n] F`.
    pub fn from_ordinary(ordinary: &[Rat]) -> Self {
        Egf::new(
            ordinary
                .iter()
                .enumerate()
                .map(|(n, c)| c * factorial(n))
                .collect(),
        )
    }

    /// Ordinary coefficients `[t^n] F = a_n / n!`.
    pub fn to_ordinary(&self) -> Vec<Rat> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c / factorial(n))
            .collect()
    }

    pub fn zero(order: usize) -> Self {
        Egf::new(vec![Rat::zero(); order + 1])
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut e = Egf::zero(order);
        e.coeffs[0] = c;
        e
    }

    pub fn one(order: usize) -> Self {
        Egf::constant(Rat::one(), order)
    }

    /// The series `t`.
    pub fn t(order: usize) -> Self {
        let mut e = Egf::zero(order);
        if order >= 1 {
            e.coeffs[1] = Rat::one();
        }
        e
    }

    /// `e^(a t)`, coefficients `a^n`.
    pub fn exp_linear(a: &Rat, order: usize) -> Self {
        Egf::new((0..=order).map(|n| pow(a, n)).collect())
    }

    /// `(e^(m t) - 1) / m`, coefficients `m^(n-1)` for `n >= 1`.
    pub fn expm1_scaled(m: &Rat, order: usize) -> Self {
        Egf::new(
            (0..=order)
                .map(|n| if n == 0 { Rat::zero() } else { pow(m, n - 1) })
                .collect(),
        )
    }

    /// `ln(1 + m t) / m`, coefficients `(-m)^(n-1) (n-1)!` for `n >= 1`.
    pub fn log1p_scaled(m: &Rat, order: usize) -> Self {
        Egf::new(
            (0..=order)
                .map(|n| {
                    if n == 0 {
                        Rat::zero()
                    } else {
                        pow(&-m.clone(), n - 1) * factorial(n - 1)
                    }
                })
                .collect(),
        )
    }

    /// `1 + c t`.
    pub fn affine(c: &Rat, order: usize) -> Self {
        let mut e = Egf::one(order);
        if order >= 1 {
            e.coeffs[1] = c.clone();
        }
        e
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// EGF coefficient `a_n`. Panics past the truncation order.
    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Egf {
        Egf::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, other: &Egf) -> Egf {
        let n = self.order().min(other.order());
        Egf::new(
            (0..=n)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        )
    }

    pub fn sub(&self, other: &Egf) -> Egf {
        let n = self.order().min(other.order());
        Egf::new(
            (0..=n)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Egf {
        Egf::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `d/dt`; the order drops by one (order 0 stays a constant zero).
    pub fn derivative(&self) -> Egf {
        if self.order() == 0 {
            return Egf::zero(0);
        }
        Egf::new(self.coeffs[1..].to_vec())
    }

    /// `F(t) / t` for `F(0) = 0`; the order drops by one.
    pub fn div_t(&self) -> Result<Egf> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::BadConstantTerm {
                op: "div_t",
                expected: "0",
                found: fmt_rat(&self.coeffs[0]),
            });
        }
        if self.order() == 0 {
            return Ok(Egf::zero(0));
        }
        // [t^n](F/t) = [t^(n+1)]F, so a'_n = a_(n+1) / (n+1)
        Ok(Egf::new(
            (0..self.order())
                .map(|n| &self.coeffs[n + 1] / int(n as i64 + 1))
                .collect(),
        ))
    }

    /// `t F(t)`; the order grows by one.
    pub fn mul_t(&self) -> Egf {
        let mut out = vec![Rat::zero()];
        out.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c * int(n as i64 + 1)),
        );
        Egf::new(out)
    }

    /// Reciprocal `1/F`, requires `a_0 != 0`.
    pub fn recip(&self) -> Result<Egf> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::BadConstantTerm {
                op: "recip",
                expected: "nonzero",
                found: "0".into(),
            });
        }
        let n = self.order();
        let binom = binomial_table(n);
        let mut out: Vec<Rat> = Vec::with_capacity(n + 1);
        out.push(a0.recip());
        for k in 1..=n {
            let mut s = Rat::zero();
            for j in 1..=k {
                s += &binom[k][j] * &self.coeffs[j] * &out[k - j];
            }
            out.push(-s / a0);
        }
        Ok(Egf::new(out))
    }

    /// Raises to a nonnegative integer power by repeated multiplication.
    pub fn powi(&self, e: usize) -> Egf {
        (0..e).fold(Egf::one(self.order()), |acc, _| egf_mul(&acc, self))
    }

    /// Evaluation of a polynomial truncation (finite sum) at a point.
    pub fn eval_truncated(&self, x: &Rat) -> Rat {
        self.to_ordinary()
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }
}

/// Binomial convolution `c_n = sum_k C(n,k) a_k b_(n-k)`.
pub fn egf_mul(f: &Egf, g: &Egf) -> Egf {
    let n = f.order().min(g.order());
    let binom = binomial_table(n);
    Egf::new(
        (0..=n)
            .map(|i| {
                (0..=i)
                    .filter(|&k| !f.coeffs[k].is_zero())
                    .map(|k| &binom[i][k] * &f.coeffs[k] * &g.coeffs[i - k])
                    .sum()
            })
            .collect(),
    )
}

/// `exp(F)` for `F(0) = 0`, from `G' = F' G`.
pub fn egf_exp(f: &Egf) -> Result<Egf> {
    if !f.coeffs[0].is_zero() {
        return Err(Error::BadConstantTerm {
            op: "exp",
            expected: "0",
            found: fmt_rat(&f.coeffs[0]),
        });
    }
    let n = f.order();
    let binom = binomial_table(n);
    let mut g: Vec<Rat> = Vec::with_capacity(n + 1);
    g.push(Rat::one());
    for i in 0..n {
        // g_(i+1) = sum_k C(i,k) f_(k+1) g_(i-k)
        let s = (0..=i)
            .map(|k| &binom[i][k] * &f.coeffs[k + 1] * &g[i - k])
            .sum();
        g.push(s);
    }
    Ok(Egf::new(g))
}

/// `ln(F)` for `F(0) = 1`, from `F L' = F'`.
pub fn egf_log(f: &Egf) -> Result<Egf> {
    if !f.coeffs[0].is_one() {
        return Err(Error::BadConstantTerm {
            op: "log",
            expected: "1",
            found: fmt_rat(&f.coeffs[0]),
        });
    }
    let n = f.order();
    let binom = binomial_table(n);
    // l[i] holds the coefficient of L' at index i, i.e. L coefficient i+1
    let mut l: Vec<Rat> = Vec::with_capacity(n);
    for i in 0..n {
        let mut s = f.coeffs[i + 1].clone();
        for k in 0..i {
            s -= &binom[i][k] * &l[k] * &f.coeffs[i - k];
        }
        l.push(s);
    }
    let mut out = vec![Rat::zero()];
    out.extend(l);
    Ok(Egf::new(out))
}

/// `F^q = exp(q ln F)` for `F(0) = 1`.
pub fn egf_pow(f: &Egf, q: &Rat) -> Result<Egf> {
    if !f.coeffs[0].is_one() {
        return Err(Error::BadConstantTerm {
            op: "pow",
            expected: "1",
            found: fmt_rat(&f.coeffs[0]),
        });
    }
    egf_exp(&egf_log(f)?.scale(q))
}

/// `F(G(t))` for `G(0) = 0`, as `sum_k a_k G^k / k!`.
pub fn egf_compose(f: &Egf, g: &Egf) -> Result<Egf> {
    if !g.coeffs[0].is_zero() {
        return Err(Error::InnerConstantNonzero(fmt_rat(&g.coeffs[0])));
    }
    let n = f.order().min(g.order());
    let g = g.truncate(n);
    let mut out = Egf::constant(f.coeffs[0].clone(), n);
    // term = G^k / k!, which vanishes below index k
    let mut term = Egf::one(n);
    for k in 1..=n {
        term = egf_mul(&term, &g).scale(&int(k as i64).recip());
        if !f.coeffs[k].is_zero() {
            out = out.add(&term.scale(&f.coeffs[k]));
        }
    }
    Ok(out)
}

fn check_reversible(f: &Egf) -> Result<()> {
    if !f.coeffs[0].is_zero() {
        return Err(Error::NotInvertible(format!(
            "constant term {} is nonzero",
            fmt_rat(&f.coeffs[0])
        )));
    }
    if f.order() == 0 || f.coeffs[1].is_zero() {
        return Err(Error::NotInvertible("linear coefficient is zero".into()));
    }
    Ok(())
}

/// Compositional inverse `F^{-1}` with `F(F^{-1}(t)) = t`.
///
/// Solved order by order: the coefficient of `t^n` in `F(H)` is
/// `a_1 h_n + (terms in h_1..h_(n-1))`, so each new `h_n` is fixed by one
/// composition with `h_n = 0`.
pub fn egf_reverse(f: &Egf) -> Result<Egf> {
    check_reversible(f)?;
    let n = f.order();
    let a1 = f.coeffs[1].clone();
    let mut h = Egf::zero(n);
    h.coeffs[1] = a1.recip();
    for k in 2..=n {
        let residual = egf_compose(&f.truncate(k), &h.truncate(k))?;
        h.coeffs[k] = -residual.coeffs[k].clone() / &a1;
    }
    Ok(h)
}

/// Lagrange inversion: `[t^n] F^{-1} = (1/n) [t^(n-1)] (t/F)^n`.
///
/// Slower than [`egf_reverse`]; kept as an independent route.
pub fn egf_reverse_lagrange(f: &Egf) -> Result<Egf> {
    check_reversible(f)?;
    let n = f.order();
    // t / F has order n-1 after dividing by t
    let t_over_f = f.div_t()?.recip()?;
    let mut out = vec![Rat::zero(); n + 1];
    let mut power = Egf::one(n - 1);
    for k in 1..=n {
        power = egf_mul(&power, &t_over_f);
        let ordinary = power.coeffs[k - 1].clone() / factorial(k - 1);
        out[k] = ordinary / int(k as i64) * factorial(k);
    }
    Ok(Egf::new(out))
}

/// JSON form `{"order": N, "egf_coeffs": ["p/q", ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgfJson {
    pub order: usize,
    pub egf_coeffs: Vec<String>,
}

impl From<&Egf> for EgfJson {
    fn from(e: &Egf) -> Self {
        EgfJson {
            order: e.order(),
            egf_coeffs: e.coeffs.iter().map(fmt_rat).collect(),
        }
    }
}

impl TryFrom<EgfJson> for Egf {
    type Error = Error;
    fn try_from(j: EgfJson) -> Result<Egf> {
        if j.egf_coeffs.len() != j.order + 1 {
            return Err(Error::Parse(format!(
                "order {} needs {} coefficients, got {}",
                j.order,
                j.order + 1,
                j.egf_coeffs.len()
            )));
        }
        let coeffs = j
            .egf_coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Egf::new(coeffs))
    }
}

impl Egf {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&EgfJson::from(self)).expect("plain strings serialize")
    }

    pub fn from_json(s: &str) -> Result<Egf> {
        let j: EgfJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Egf::try_from(j)
    }
}

impl fmt::Display for Egf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_rat).collect();
        write!(f, "egf[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::frac;
    use proptest::prelude::*;

    fn exp_t(order: usize) -> Egf {
        Egf::exp_linear(&int(1), order)
    }

    #[test]
    fn mul_examples() {
        let sq = egf_mul(&exp_t(8), &exp_t(8));
        assert_eq!(sq, Egf::exp_linear(&int(2), 8));
        assert_eq!(egf_mul(&Egf::t(2), &Egf::t(2)), Egf::from_ints(&[0, 0, 2]));
        // t/(e^t-1) * (e^t-1)/t
        let a = Egf::expm1_scaled(&int(1), 11).div_t().unwrap();
        let b = a.recip().unwrap();
        assert_eq!(egf_mul(&a, &b), Egf::one(10));
    }

    #[test]
    fn exp_log_pow_examples() {
        assert_eq!(egf_exp(&Egf::t(7)).unwrap(), exp_t(7));
        let log = egf_log(&Egf::affine(&int(1), 8)).unwrap();
        for n in 1..=8usize {
            let sign = if n % 2 == 1 { 1 } else { -1 };
            assert_eq!(log.coeffs[n], int(sign) * factorial(n - 1));
        }
        let p = egf_pow(&Egf::affine(&int(2), 4), &frac(-3, 2)).unwrap();
        assert_eq!(p.coeffs[1], int(-3));
        assert_eq!(p.coeffs[2], int(15));
    }

    #[test]
    fn precondition_errors() {
        assert!(matches!(
            egf_exp(&Egf::one(3)),
            Err(Error::BadConstantTerm { op: "exp", .. })
        ));
        assert!(matches!(
            egf_log(&Egf::t(3)),
            Err(Error::BadConstantTerm { op: "log", .. })
        ));
        assert!(matches!(
            egf_pow(&Egf::constant(int(2), 3), &int(1)),
            Err(Error::BadConstantTerm { .. })
        ));
        assert!(matches!(
            egf_compose(&exp_t(3), &exp_t(3)),
            Err(Error::InnerConstantNonzero(_))
        ));
        assert!(matches!(
            egf_reverse(&Egf::from_ints(&[0, 0, 1])),
            Err(Error::NotInvertible(_))
        ));
        assert!(matches!(
            egf_reverse(&exp_t(4)),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn compose_examples() {
        let f = Egf::from_ints(&[3, -1, 4, 1, -5, 9]);
        assert_eq!(egf_compose(&f, &Egf::t(5)).unwrap(), f);
        // exp(e^t - 1) gives the Bell numbers
        let bell = egf_compose(&exp_t(8), &Egf::expm1_scaled(&int(1), 8)).unwrap();
        let mut b = vec![int(1)];
        for n in 0..8 {
            let next = (0..=n).map(|k| crate::rat::binomial(n, k) * &b[k]).sum();
            b.push(next);
        }
        assert_eq!(bell.coeffs(), &b[..]);
        assert_eq!(
            &bell.coeffs()[..5],
            Egf::from_ints(&[1, 1, 2, 5, 15]).coeffs()
        );
        let m = int(2);
        let id = egf_compose(&Egf::expm1_scaled(&m, 12), &Egf::log1p_scaled(&m, 12)).unwrap();
        assert_eq!(id, Egf::t(12));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(egf_reverse(&Egf::t(6)).unwrap(), Egf::t(6));
        let r = egf_reverse(&Egf::expm1_scaled(&int(1), 10)).unwrap();
        assert_eq!(r, Egf::log1p_scaled(&int(1), 10));
        assert_eq!(
            egf_compose(&Egf::expm1_scaled(&int(1), 10), &r).unwrap(),
            Egf::t(10)
        );
        let r2 = egf_reverse(&Egf::expm1_scaled(&int(2), 5)).unwrap();
        assert_eq!(&r2.coeffs()[1..4], &[int(1), int(-2), int(8)]);
    }

    #[test]
    fn ordinary_conversion_and_json() {
        let e = Egf::new(vec![frac(1, 2), int(-3), frac(7, 5)]);
        assert_eq!(Egf::from_ordinary(&e.to_ordinary()), e);
        let json = e.to_json();
        assert_eq!(json, r#"{"order":2,"egf_coeffs":["1/2","-3","7/5"]}"#);
        assert_eq!(Egf::from_json(&json).unwrap(), e);
        assert!(Egf::from_json(r#"{"order":3,"egf_coeffs":["1"]}"#).is_err());
    }

    #[test]
    fn mixed_orders_truncate_to_minimum() {
        let a = exp_t(3);
        let b = exp_t(9);
        assert_eq!(egf_mul(&a, &b).order(), 3);
        assert_eq!(a.add(&b).order(), 3);
        assert_eq!(egf_compose(&b, &Egf::t(4)).unwrap().order(), 4);
    }

    fn invertible() -> impl Strategy<Value = Egf> {
        (
            prop::sample::select(vec![-3i64, -2, -1, 1, 2, 3]),
            prop::collection::vec(-4i64..=4, 9),
        )
            .prop_map(|(a1, rest)| {
                let mut c = vec![0, a1];
                c.extend(rest);
                Egf::from_ints(&c)
            })
    }

    fn small(order: usize) -> impl Strategy<Value = Egf> {
        prop::collection::vec(-5i64..=5, order + 1).prop_map(|c| Egf::from_ints(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn reverse_is_two_sided_inverse(f in invertible()) {
            let h = egf_reverse(&f).unwrap();
            prop_assert_eq!(egf_compose(&h, &f).unwrap(), Egf::t(10));
            prop_assert_eq!(egf_compose(&f, &h).unwrap(), Egf::t(10));
        }

        #[test]
        fn reverse_matches_lagrange(f in invertible()) {
            prop_assert_eq!(egf_reverse(&f).unwrap(), egf_reverse_lagrange(&f).unwrap());
        }

        #[test]
        fn exp_log_round_trip(f in small(8)) {
            let mut c = f.coeffs().to_vec();
            c[0] = Rat::zero();
            let f0 = Egf::new(c);
            prop_assert_eq!(egf_log(&egf_exp(&f0).unwrap()).unwrap(), f0.clone());
            let f1 = f0.add(&Egf::one(8));
            prop_assert_eq!(egf_exp(&egf_log(&f1).unwrap()).unwrap(), f1.clone());
            prop_assert_eq!(egf_pow(&f1, &int(1)).unwrap(), f1);
        }

        #[test]
        fn mul_commutative_associative(a in small(7), b in small(7), c in small(7)) {
            prop_assert_eq!(egf_mul(&a, &b), egf_mul(&b, &a));
            prop_assert_eq!(egf_mul(&egf_mul(&a, &b), &c), egf_mul(&a, &egf_mul(&b, &c)));
        }
    }
}
