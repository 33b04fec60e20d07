//! Formal derivatives of context-free grammars acting on polynomials in `x, y`.
//!
//! A grammar substitutes each variable by a polynomial image; its formal
//! derivative is the unique derivation extending those substitutions. With
//! the rules `y -> y x^m, x -> x`, the n-th derivative of `y x^r` has the
//! r-Whitney numbers as coefficients of `y x^(mk+r)`.

use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rat::{int, Rat};

/// Variable of the two-letter alphabet. The discriminant indexes
/// [`Monomial::exps`] and [`Grammar`]'s rule table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    Y = 0,
    X = 1,
}

impl Var {
    pub const ALL: [Var; 2] = [Var::Y, Var::X];
}

/// `y^exps[0] x^exps[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exps: [u32; 2],
}

impl Monomial {
    pub fn new(y: u32, x: u32) -> Self {
        Monomial { exps: [y, x] }
    }

    pub fn y_exp(&self) -> u32 {
        self.exps[Var::Y as usize]
    }

    pub fn x_exp(&self) -> u32 {
        self.exps[Var::X as usize]
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: [self.exps[0] + other.exps[0], self.exps[1] + other.exps[1]],
        }
    }
}

/// Finite linear combination of monomials `y^a x^b`; zero terms are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XYPoly {
    terms: BTreeMap<Monomial, Rat>,
}

impl XYPoly {
    pub fn zero() -> Self {
        XYPoly::default()
    }

    pub fn one() -> Self {
        XYPoly::term(Rat::one(), 0, 0)
    }

    /// `c y^a x^b`.
    pub fn term(c: Rat, y: u32, x: u32) -> Self {
        let mut p = XYPoly::zero();
        p.add_term(Monomial::new(y, x), c);
        p
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::Y => XYPoly::term(Rat::one(), 1, 0),
            Var::X => XYPoly::term(Rat::one(), 0, 1),
        }
    }

    /// Embeds a polynomial in `x` (or in `y` when `var == Var::Y`).
    pub fn from_poly(p: &Poly, var: Var) -> Self {
        let mut out = XYPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            let mono = match var {
                Var::Y => Monomial::new(i as u32, 0),
                Var::X => Monomial::new(0, i as u32),
            };
            out.add_term(mono, c.clone());
        }
        out
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn coeff(&self, y: u32, x: u32) -> Rat {
        self.terms
            .get(&Monomial::new(y, x))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rat) -> XYPoly {
        let mut out = XYPoly::zero();
        for (m, a) in &self.terms {
            out.add_term(*m, a * c);
        }
        out
    }

    pub fn pow(&self, e: usize) -> XYPoly {
        (0..e).fold(XYPoly::one(), |acc, _| &acc * self)
    }

    /// `p(q)` for a univariate `p`, evaluated by Horner's scheme in this ring.
    pub fn substitute_into(p: &Poly, q: &XYPoly) -> XYPoly {
        p.coeffs().iter().rev().fold(XYPoly::zero(), |acc, c| {
            &(&acc * q) + &XYPoly::term(c.clone(), 0, 0)
        })
    }
}

impl Add for &XYPoly {
    type Output = XYPoly;
    fn add(self, rhs: &XYPoly) -> XYPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &XYPoly {
    type Output = XYPoly;
    fn sub(self, rhs: &XYPoly) -> XYPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Mul for &XYPoly {
    type Output = XYPoly;
    fn mul(self, rhs: &XYPoly) -> XYPoly {
        let mut out = XYPoly::zero();
        for (ma, a) in &self.terms {
            for (mb, b) in &rhs.terms {
                out.add_term(ma.times(mb), a * b);
            }
        }
        out
    }
}

impl fmt::Display for XYPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut s = format!("({c})");
                for (v, name) in [(Var::Y, "y"), (Var::X, "x")] {
                    match m.exps[v as usize] {
                        0 => {}
                        1 => s.push_str(&format!("*{name}")),
                        e => s.push_str(&format!("*{name}^{e}")),
                    }
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Substitution rules, one image per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grammar {
    rules: [XYPoly; 2],
}

impl Grammar {
    pub fn new(y_image: XYPoly, x_image: XYPoly) -> Self {
        Grammar {
            rules: [y_image, x_image],
        }
    }

    /// `y -> y x^m, x -> x`.
    pub fn whitney(m: u32) -> Self {
        Grammar::new(XYPoly::term(Rat::one(), 1, m), XYPoly::var(Var::X))
    }

    /// `y -> x y, x -> x`.
    pub fn stirling() -> Self {
        Grammar::whitney(1)
    }

    pub fn rule(&self, v: Var) -> &XYPoly {
        &self.rules[v as usize]
    }
}

/// One application of the grammar's derivation, via the Leibniz rule on each
/// monomial: `D(y^a x^b) = a y^(a-1) x^b D(y) + b y^a x^(b-1) D(x)`.
pub fn derive_once(g: &Grammar, p: &XYPoly) -> XYPoly {
    let mut out = XYPoly::zero();
    for (mono, c) in p.terms() {
        for v in Var::ALL {
            let e = mono.exps[v as usize];
            if e == 0 {
                continue;
            }
            let mut rest = *mono;
            rest.exps[v as usize] -= 1;
            let coef = c * int(e as i64);
            for (img_mono, img_c) in g.rule(v).terms() {
                out.add_term(rest.times(img_mono), &coef * img_c);
            }
        }
    }
    out
}

pub fn derive_n(g: &Grammar, p: &XYPoly, n: usize) -> XYPoly {
    (0..n).fold(p.clone(), |acc, _| derive_once(g, &acc))
}

/// Reads `W_{m,r}(n, k)` as the coefficient of `y x^(mk+r)` in `D^n (y x^r)`.
pub fn whitney_row_from_grammar(m: u32, r: u32, n: usize) -> Result<Vec<Rat>> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let derived = derive_n(&Grammar::whitney(m), &XYPoly::term(Rat::one(), 1, r), n);
    let mut row = vec![Rat::zero(); n + 1];
    for (mono, c) in derived.terms() {
        let (ye, xe) = (mono.y_exp(), mono.x_exp());
        let stray = Error::StrayMonomial {
            y_exp: ye,
            x_exp: xe,
        };
        if ye != 1 || xe < r || !(xe - r).is_multiple_of(m) {
            return Err(stray);
        }
        let k = ((xe - r) / m) as usize;
        if k > n {
            return Err(stray);
        }
        row[k] = c.clone();
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn y_x(c: i64, x: u32) -> XYPoly {
        XYPoly::term(int(c), 1, x)
    }

    #[test]
    fn single_derivations() {
        let g = Grammar::whitney(2);
        assert_eq!(derive_once(&g, &XYPoly::var(Var::Y)), y_x(1, 2));
        assert_eq!(derive_once(&g, &y_x(1, 3)), &y_x(1, 5) + &y_x(3, 3));
        let s = Grammar::stirling();
        assert_eq!(derive_once(&s, &y_x(1, 1)), &y_x(1, 2) + &y_x(1, 1));
    }

    #[test]
    fn iterated_derivations() {
        let g = Grammar::whitney(2);
        let p = y_x(1, 3);
        assert_eq!(derive_n(&g, &p, 0), p);
        let expected = &(&y_x(1, 7) + &y_x(8, 5)) + &y_x(9, 3);
        assert_eq!(derive_n(&g, &p, 2), expected);
        let stir = derive_n(&Grammar::stirling(), &XYPoly::var(Var::Y), 3);
        assert_eq!(stir, &(&y_x(1, 3) + &y_x(3, 2)) + &y_x(1, 1));
    }

    #[test]
    fn rows_from_grammar() {
        assert_eq!(whitney_row_from_grammar(3, 2, 0).unwrap(), vec![int(1)]);
        assert_eq!(
            whitney_row_from_grammar(2, 2, 2).unwrap(),
            vec![int(4), int(6), int(1)]
        );
        assert_eq!(
            whitney_row_from_grammar(1, 0, 4).unwrap(),
            vec![int(0), int(1), int(7), int(6), int(1)]
        );
        assert!(whitney_row_from_grammar(0, 1, 2).is_err());
    }

    fn small_xy() -> impl Strategy<Value = XYPoly> {
        prop::collection::vec(((0u32..3), (0u32..4), -5i64..=5), 0..5).prop_map(|ts| {
            let mut p = XYPoly::zero();
            for (a, b, c) in ts {
                p.add_term(Monomial::new(a, b), int(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn derivation_obeys_leibniz(p in small_xy(), q in small_xy(), m in 1u32..4) {
            let g = Grammar::whitney(m);
            let lhs = derive_once(&g, &(&p * &q));
            let rhs = &(&derive_once(&g, &p) * &q) + &(&p * &derive_once(&g, &q));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn no_zero_terms_are_stored(p in small_xy(), q in small_xy()) {
            let d = &(&p * &q) - &(&q * &p);
            prop_assert!(d.is_empty());
        }
    }
}
