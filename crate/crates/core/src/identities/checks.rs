//! The registry entries. Each evaluator walks its grid and records both
//! sides of every instance in a [`Tally`].

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Grid, IdentityCheck, Mode, Tally, Variant};
use crate::egf::{egf_exp, egf_mul, Egf};
use crate::error::{Error, Result};
use crate::grammar::{derive_once, Grammar, Var, XYPoly};
use crate::linop::{mul_x, one_plus_m_d, LinOp};
use crate::matrix::det_bareiss;
use crate::poly::{interpolate, stepped_product, Poly};
use crate::rat::{binomial, factorial, int, pow, Rat};
use crate::riordan::{connection_constants, riordan_inverse, riordan_mul, ExpRiordan, ShefferPair};
use crate::triangles::{
    cauchy_numbers_integral, classical_seq, dowling_hat, family, m_stirling1_row, m_stirling2_rows,
    touchard, touchard_hat, whitney1_rows, whitney2_rows, FamilyKind, FamilyParams, SeqKind,
};

fn mr(m: u32) -> Rat {
    int(m as i64)
}

/// Entry `(n, k)` of a ragged triangle, zero outside it.
fn at(rows: &[Vec<Rat>], n: i64, k: i64) -> Rat {
    if n < 0 || k < 0 {
        return Rat::zero();
    }
    rows.get(n as usize)
        .and_then(|row| row.get(k as usize))
        .cloned()
        .unwrap_or_else(Rat::zero)
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
fn binom(n: i64, k: i64) -> Rat {
    if n < 0 || k < 0 || k > n {
        Rat::zero()
    } else {
        binomial(n as usize, k as usize)
    }
}

fn x_pow(n: usize) -> Poly {
    Poly::monomial(Rat::one(), n)
}

fn polys(rows: Vec<Vec<Rat>>) -> Vec<Poly> {
    rows.into_iter().map(Poly::new).collect()
}

fn dowlings(m: u32, r: i64, top: usize) -> Vec<Poly> {
    polys(whitney2_rows(m, &int(r), top))
}

fn touchards(m: u32, top: usize) -> Vec<Poly> {
    polys(m_stirling2_rows(m, top))
}

fn bernoulli_polys(top: usize) -> Result<Vec<Poly>> {
    let p = FamilyParams::new(1, Rat::zero());
    (0..=top)
        .map(|n| family(FamilyKind::Bernoulli, &p, n))
        .collect()
}

fn euler_polys(top: usize) -> Result<Vec<Poly>> {
    let p = FamilyParams::new(1, Rat::zero());
    (0..=top)
        .map(|n| family(FamilyKind::Euler, &p, n))
        .collect()
}

fn nonneg_r(r: i64) -> Result<u32> {
    u32::try_from(r)
        .map_err(|_| Error::InvalidParameter(format!("r = {r} must be nonnegative here")))
}

fn egf_whitney2(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let rows = whitney2_rows(m, &int(r), top);
            let f = Egf::expm1_scaled(&mr(m), top);
            let mut col = Egf::exp_linear(&int(r), top);
            for k in 0..=top {
                if k > 0 {
                    col = egf_mul(&col, &f).scale(&int(k as i64).recip());
                }
                for n in g.ns() {
                    let p = [("n", n as i64), ("k", k as i64), ("m", m as i64), ("r", r)];
                    t.record(&p, &at(&rows, n as i64, k as i64), col.coeff(n));
                }
            }
        }
    }
    Ok(t)
}

/// The right side's `t^n` coefficient is a polynomial in `u` of degree `n`;
/// it is recovered exactly from its values at `u = 0..=top` by interpolation.
fn egf_dowling(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    let us: Vec<Rat> = (0..=top as i64).map(int).collect();
    for &m in &g.m {
        for &r in &g.r {
            let f = Egf::expm1_scaled(&mr(m), top);
            let rt = Egf::t(top).scale(&int(r));
            let series = us
                .iter()
                .map(|u| egf_exp(&rt.add(&f.scale(u))))
                .collect::<Result<Vec<_>>>()?;
            let d = dowlings(m, r, top);
            for n in g.ns() {
                let pts: Vec<(Rat, Rat)> = us
                    .iter()
                    .zip(&series)
                    .map(|(u, s)| (u.clone(), s.coeff(n).clone()))
                    .collect();
                t.record(
                    &[("n", n as i64), ("m", m as i64), ("r", r)],
                    &d[n],
                    &interpolate(&pts),
                );
            }
        }
    }
    Ok(t)
}

fn lemma_grammar_dowling(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let r32 = nonneg_r(r)?;
            let grammar = Grammar::whitney(m);
            let yxr = XYPoly::term(Rat::one(), 1, r32);
            let xm = XYPoly::term(Rat::one(), 0, m);
            let d = dowlings(m, r, top);
            let mut cur = yxr.clone();
            for n in 0..=top {
                if n > 0 {
                    cur = derive_once(&grammar, &cur);
                }
                if n < g.n.0 {
                    continue;
                }
                let rhs = &yxr * &XYPoly::substitute_into(&d[n], &xm);
                t.record(&[("n", n as i64), ("m", m as i64), ("r", r)], &cur, &rhs);
            }
        }
    }
    Ok(t)
}

fn dowling_shift(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let d = dowlings(m, r, top);
            for &l in &g.l {
                let dl = dowlings(m, r + l, top);
                for n in g.ns() {
                    let rhs: Poly = (0..=n)
                        .map(|k| d[k].scale(&(binomial(n, k) * pow(&int(l), n - k))))
                        .sum();
                    let p = [("n", n as i64), ("m", m as i64), ("r", r), ("l", l)];
                    t.record(&p, &dl[n], &rhs);
                }
            }
        }
    }
    Ok(t)
}

/// The `l = 1` case and its binomial inversion.
fn dowling_shift_l1(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let d = dowlings(m, r, top);
            let d1 = dowlings(m, r + 1, top);
            for n in g.ns() {
                let p = [("n", n as i64), ("m", m as i64), ("r", r)];
                let up: Poly = (0..=n).map(|k| d[k].scale(&binomial(n, k))).sum();
                t.record(&p, &d1[n], &up);
                let down: Poly = (0..=n)
                    .map(|k| d1[k].scale(&(binomial(n, k) * pow(&int(-1), n - k))))
                    .sum();
                t.record(&p, &d[n], &down);
            }
        }
    }
    Ok(t)
}

fn spivey(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let (top_n, top_h) = (g.n.1, g.h.1);
    for &m in &g.m {
        for &r in &g.r {
            let rows = whitney2_rows(m, &int(r), top_n + top_h);
            let d = polys(rows.clone());
            for n in g.ns() {
                for h in g.hs() {
                    let mut rhs = Poly::zero();
                    for k in 0..=n {
                        for j in 0..=h {
                            let c = binomial(n, k)
                                * &rows[h][j]
                                * pow(&int((j as i64) * m as i64), n - k);
                            rhs = &rhs + &(&d[k] * &Poly::monomial(c, j));
                        }
                    }
                    let p = [("n", n as i64), ("h", h as i64), ("m", m as i64), ("r", r)];
                    t.record(&p, &d[n + h], &rhs);
                }
            }
        }
    }
    Ok(t)
}

fn whitney_convolution(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let (top_n, top_h) = (g.n.1, g.h.1);
    for &m in &g.m {
        for &r in &g.r {
            let w = whitney2_rows(m, &int(r), top_n + top_h);
            for n in g.ns() {
                for h in g.hs() {
                    for s in 0..=(n + h) as i64 {
                        let mut rhs = Rat::zero();
                        for k in 0..=n {
                            for j in 0..=h {
                                rhs += binomial(n, k)
                                    * &w[h][j]
                                    * at(&w, k as i64, s - j as i64)
                                    * pow(&int(j as i64 * m as i64), n - k);
                            }
                        }
                        let p = [
                            ("n", n as i64),
                            ("h", h as i64),
                            ("k", s),
                            ("m", m as i64),
                            ("r", r),
                        ];
                        t.record(&p, &w[n + h][s as usize], &rhs);
                    }
                }
            }
        }
    }
    Ok(t)
}

fn dowling_recurrence(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let d = dowlings(m, r, top + 1);
            for n in g.ns() {
                let sum: Poly = (0..=n)
                    .map(|j| d[j].scale(&(binomial(n, j) * pow(&mr(m), n - j))))
                    .sum();
                let rhs = &d[n].scale(&int(r)) + &mul_x(&sum);
                t.record(
                    &[("n", n as i64), ("m", m as i64), ("r", r)],
                    &d[n + 1],
                    &rhs,
                );
            }
        }
    }
    Ok(t)
}

fn whitney_recurrence(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let w = whitney2_rows(m, &int(r), top + 1);
            for n in g.ns() {
                let n_ = n as i64;
                for k in 0..=n_ + 1 {
                    let mut rhs = int(r) * at(&w, n_, k);
                    for j in (k - 1).max(0)..=n_ {
                        rhs += binom(n_, j) * pow(&mr(m), (n_ - j) as usize) * at(&w, j, k - 1);
                    }
                    let p = [("n", n_), ("k", k), ("m", m as i64), ("r", r)];
                    t.record(&p, &at(&w, n_ + 1, k), &rhs);
                }
            }
        }
    }
    Ok(t)
}

fn r_shift_s(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let dr = dowlings(m, r, top);
            for &s in &g.s {
                let ds = dowlings(m, s, top);
                for n in g.ns() {
                    let rhs: Poly = (0..=n)
                        .map(|j| ds[j].scale(&(binomial(n, j) * pow(&int(r - s), n - j))))
                        .sum();
                    let p = [("n", n as i64), ("m", m as i64), ("r", r), ("s", s)];
                    t.record(&p, &dr[n], &rhs);
                }
            }
        }
    }
    Ok(t)
}

/// `W_{m,r}(n,k) = sum_j C(n,j) (r-s)^(n-j) W_{m,s}(j,k)` with `j` running to
/// `upper(n, r)`.
fn r_shift_numbers(g: &Grid, upper: fn(i64, i64) -> i64) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let wr = whitney2_rows(m, &int(r), top);
            for &s in &g.s {
                let ws = whitney2_rows(m, &int(s), top);
                for n in g.ns() {
                    let n_ = n as i64;
                    for k in 0..=n_ {
                        let mut rhs = Rat::zero();
                        for j in 0..=upper(n_, r) {
                            let e = n_ - j;
                            if e < 0 {
                                continue;
                            }
                            rhs += binom(n_, j) * pow(&int(r - s), e as usize) * at(&ws, j, k);
                        }
                        let p = [("n", n_), ("k", k), ("m", m as i64), ("r", r), ("s", s)];
                        t.record(&p, &at(&wr, n_, k), &rhs);
                    }
                }
            }
        }
    }
    Ok(t)
}

fn whitney_r_shift(g: &Grid) -> Result<Tally> {
    r_shift_numbers(g, |n, _| n)
}

fn whitney_r_shift_proof_line(g: &Grid) -> Result<Tally> {
    r_shift_numbers(g, |_, r| r)
}

fn touchard_binomial(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    let x_plus_y = &XYPoly::var(Var::X) + &XYPoly::var(Var::Y);
    for &m in &g.m {
        let tm = touchards(m, top);
        for n in g.ns() {
            let lhs = XYPoly::substitute_into(&tm[n], &x_plus_y);
            let mut rhs = XYPoly::zero();
            for k in 0..=n {
                let term =
                    &XYPoly::from_poly(&tm[k], Var::X) * &XYPoly::from_poly(&tm[n - k], Var::Y);
                rhs = &rhs + &term.scale(&binomial(n, k));
            }
            t.record(&[("n", n as i64), ("m", m as i64)], &lhs, &rhs);
        }
    }
    Ok(t)
}

fn umbral_inverse_t(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        let s2 = m_stirling2_rows(m, top);
        let tm = touchards(m, top);
        let hat: Vec<Poly> = (0..=top).map(|k| touchard_hat(m, k)).collect();
        for n in g.ns() {
            let p = [("n", n as i64), ("m", m as i64)];
            let a: Poly = (0..=n).map(|k| hat[k].scale(&s2[n][k])).sum();
            t.record(&p, &a, &x_pow(n));
            let s1 = m_stirling1_row(m, n);
            let b: Poly = (0..=n).map(|k| tm[k].scale(&s1[k])).sum();
            t.record(&p, &b, &x_pow(n));
        }
    }
    Ok(t)
}

fn delta_ops_with(g: &Grid, log_op: fn(u32, usize) -> Result<LinOp>) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        let diff = LinOp::scaled_difference(&mr(m), top);
        let log = log_op(m, top)?;
        let tm = touchards(m, top);
        for n in g.ns() {
            let p = [("n", n as i64), ("m", m as i64)];
            let lower = |v: &dyn Fn(usize) -> Poly| {
                if n == 0 {
                    Poly::zero()
                } else {
                    v(n - 1).scale(&int(n as i64))
                }
            };
            let hat_n = touchard_hat(m, n);
            t.record(&p, &diff.apply(&hat_n)?, &lower(&|k| touchard_hat(m, k)));
            t.record(&p, &log.apply(&tm[n])?, &lower(&|k| tm[k].clone()));
        }
    }
    Ok(t)
}

fn delta_ops(g: &Grid) -> Result<Tally> {
    delta_ops_with(g, |m, order| LinOp::scaled_log(&mr(m), order))
}

/// The log operator with coefficients `(-1)^k m^(k-1) (k-1)!` as displayed.
fn delta_ops_printed(g: &Grid) -> Result<Tally> {
    delta_ops_with(g, |m, order| {
        let coeffs = (0..=order)
            .map(|k| {
                if k == 0 {
                    Rat::zero()
                } else {
                    pow(&int(-1), k) * pow(&mr(m), k - 1) * factorial(k - 1)
                }
            })
            .collect();
        Ok(LinOp::new(Egf::new(coeffs)))
    })
}

fn binomial_recurrences(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        let tm = touchards(m, top);
        let mut hat = Poly::one();
        let mut tou = Poly::one();
        for n in 0..=top {
            if n > 0 {
                hat = mul_x(&hat.shifted(&-mr(m)));
                tou = mul_x(&one_plus_m_d(&mr(m), &tou));
            }
            if n < g.n.0 {
                continue;
            }
            let p = [("n", n as i64), ("m", m as i64)];
            t.record(&p, &hat, &stepped_product(n, &mr(m), &Rat::zero()));
            t.record(&p, &tou, &tm[n]);
        }
    }
    Ok(t)
}

fn sheffer_binomial_d(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    let x_plus_y = &XYPoly::var(Var::X) + &XYPoly::var(Var::Y);
    for &m in &g.m {
        let tm = touchards(m, top);
        for &r in &g.r {
            let d = dowlings(m, r, top);
            for n in g.ns() {
                let lhs = XYPoly::substitute_into(&d[n], &x_plus_y);
                let mut rhs = XYPoly::zero();
                for k in 0..=n {
                    let term =
                        &XYPoly::from_poly(&d[k], Var::X) * &XYPoly::from_poly(&tm[n - k], Var::Y);
                    rhs = &rhs + &term.scale(&binomial(n, k));
                }
                t.record(&[("n", n as i64), ("m", m as i64), ("r", r)], &lhs, &rhs);
            }
        }
    }
    Ok(t)
}

fn dowling_umbral_inverse(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let w2 = whitney2_rows(m, &int(r), top);
            let w1 = whitney1_rows(m, &int(r), top);
            let d = polys(w2.clone());
            let hat: Vec<Poly> = (0..=top)
                .map(|k| touchard_hat(m, k).shifted(&int(-r)))
                .collect();
            for n in g.ns() {
                let p = [("n", n as i64), ("m", m as i64), ("r", r)];
                t.record(&p, &hat[n], &dowling_hat(m, &int(r), n));
                let a: Poly = (0..=n).map(|k| hat[k].scale(&w2[n][k])).sum();
                t.record(&p, &a, &x_pow(n));
                let b: Poly = (0..=n).map(|k| d[k].scale(&w1[n][k])).sum();
                t.record(&p, &b, &x_pow(n));
            }
        }
    }
    Ok(t)
}

fn dowlstir(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        let tm = touchards(m, top);
        for &r in &g.r {
            let d = dowlings(m, r, top);
            let op = LinOp::binomial_power(&mr(m), &(int(r) / mr(m)), top)?;
            let coef: Vec<Rat> = (0..=top)
                .map(|k| stepped_product(k, &mr(m), &Rat::zero()).eval(&int(r)) / factorial(k))
                .collect();
            for n in g.ns() {
                let p = [("n", n as i64), ("m", m as i64), ("r", r)];
                let mut rhs = Poly::zero();
                let mut deriv = tm[n].clone();
                for c in coef.iter().take(n + 1) {
                    rhs = &rhs + &deriv.scale(c);
                    deriv = deriv.derivative();
                }
                t.record(&p, &d[n], &rhs);
                t.record(&p, &d[n], &op.apply(&tm[n])?);
            }
        }
    }
    Ok(t)
}

/// `P_n(x) = sum_k sum_{l>=k} C(n,l) P_{n-l}(0) w(l,k) D_k(x)` for an Appell family.
fn appell_to_dowling(g: &Grid, family_polys: Vec<Poly>, at_zero: Vec<Rat>) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let w1 = whitney1_rows(m, &int(r), top);
            let d = dowlings(m, r, top);
            for n in g.ns() {
                let mut rhs = Poly::zero();
                for k in 0..=n {
                    let a: Rat = (k..=n)
                        .map(|l| binomial(n, l) * &at_zero[n - l] * &w1[l][k])
                        .sum();
                    rhs = &rhs + &d[k].scale(&a);
                }
                t.record(
                    &[("n", n as i64), ("m", m as i64), ("r", r)],
                    &family_polys[n],
                    &rhs,
                );
            }
        }
    }
    Ok(t)
}

fn bernoulli_to_dowling(g: &Grid) -> Result<Tally> {
    let top = g.n.1;
    appell_to_dowling(
        g,
        bernoulli_polys(top)?,
        classical_seq(SeqKind::BernoulliNum, top),
    )
}

fn euler_to_dowling(g: &Grid) -> Result<Tally> {
    let top = g.n.1;
    appell_to_dowling(
        g,
        euler_polys(top)?,
        classical_seq(SeqKind::EulerNumAtZero, top),
    )
}

/// Coefficients of `D_n` in the Bernoulli basis as printed: the triple sum
/// with `T_{s+1}(1)`.
fn bernoulli_coeffs_literal(m: u32, r: i64, top: usize) -> Vec<Vec<Rat>> {
    let w = whitney2_rows(m, &int(r), top);
    let bn = classical_seq(SeqKind::BernoulliNum, top);
    let t1: Vec<Rat> = (0..=top + 1)
        .map(|s| touchard(m, s).eval(&Rat::one()))
        .collect();
    (0..=top)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let mut a = Rat::zero();
                    for l in 0..=n - k {
                        for s in 0..=l {
                            a += binomial(n + 1, l + 1)
                                * binomial(l + 1, s + 1)
                                * &w[n - l][k]
                                * pow(&mr(m), l - s)
                                * &t1[s + 1]
                                * &bn[l - s];
                        }
                    }
                    a / int(n as i64 + 1)
                })
                .collect()
        })
        .collect()
}

/// Coefficients of `D_n` in the Euler basis as printed.
fn euler_coeffs_literal(m: u32, r: i64, top: usize) -> Vec<Vec<Rat>> {
    let w = whitney2_rows(m, &int(r), top);
    let t1: Vec<Rat> = (0..=top)
        .map(|l| touchard(m, l).eval(&Rat::one()))
        .collect();
    let half = crate::rat::frac(1, 2);
    (0..=top)
        .map(|n| {
            (0..=n)
                .map(|k| {
                    let s: Rat = (0..=n - k)
                        .map(|l| binomial(n, l) * &w[n - l][k] * &t1[l])
                        .sum();
                    &half * s + &half * &w[n][k]
                })
                .collect()
        })
        .collect()
}

fn dowling_in_basis(
    g: &Grid,
    basis: Vec<Poly>,
    coeffs: fn(u32, i64, usize) -> Vec<Vec<Rat>>,
) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let d = dowlings(m, r, top);
            let a = coeffs(m, r, top);
            for n in g.ns() {
                let rhs: Poly = (0..=n).map(|k| basis[k].scale(&a[n][k])).sum();
                t.record(&[("n", n as i64), ("m", m as i64), ("r", r)], &d[n], &rhs);
            }
        }
    }
    Ok(t)
}

/// Expands with constants from the generic Sheffer connection array and also
/// compares those constants with the printed closed form.
fn dowling_in_basis_riordan(
    g: &Grid,
    basis: Vec<Poly>,
    pair: fn(usize) -> ShefferPair,
    coeffs: fn(u32, i64, usize) -> Vec<Vec<Rat>>,
) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let d = dowlings(m, r, top);
            let arr =
                connection_constants(&ShefferPair::dowling(m, &int(r), top), &pair(top), top)?;
            let literal = coeffs(m, r, top);
            for n in g.ns() {
                let rhs: Poly = (0..=n).map(|k| basis[k].scale(&arr.get(n, k))).sum();
                t.record(&[("n", n as i64), ("m", m as i64), ("r", r)], &d[n], &rhs);
                for k in 0..=n {
                    let p = [("n", n as i64), ("k", k as i64), ("m", m as i64), ("r", r)];
                    t.record(&p, &arr.get(n, k), &literal[n][k]);
                }
            }
        }
    }
    Ok(t)
}

fn dowling_to_bernoulli(g: &Grid) -> Result<Tally> {
    dowling_in_basis(g, bernoulli_polys(g.n.1)?, bernoulli_coeffs_literal)
}

fn dowling_to_bernoulli_riordan(g: &Grid) -> Result<Tally> {
    dowling_in_basis_riordan(
        g,
        bernoulli_polys(g.n.1)?,
        ShefferPair::bernoulli,
        bernoulli_coeffs_literal,
    )
}

fn dowling_to_euler(g: &Grid) -> Result<Tally> {
    dowling_in_basis(g, euler_polys(g.n.1)?, euler_coeffs_literal)
}

fn dowling_to_euler_riordan(g: &Grid) -> Result<Tally> {
    dowling_in_basis_riordan(
        g,
        euler_polys(g.n.1)?,
        ShefferPair::euler,
        euler_coeffs_literal,
    )
}

/// The three row recurrences of an exponential Riordan array `<g, f>`.
///
/// `a`: A-sequence (EGF-normalized); `f_coef(j)`: EGF coefficient `f_j`;
/// `shifted(n, k)`: entry of `<g', f>`.
struct AzCase<'a> {
    d: &'a [Vec<Rat>],
    a: &'a [Rat],
    f_coef: &'a dyn Fn(i64) -> Rat,
    shifted: &'a dyn Fn(i64, i64) -> Rat,
}

fn az_record(t: &mut Tally, c: &AzCase, n: i64, base: &[(&str, i64)]) {
    let d = c.d;
    let params = |eq: i64, k: i64| {
        let mut p: Vec<(&str, i64)> = vec![("eq", eq), ("n", n), ("k", k)];
        p.extend_from_slice(base);
        p
    };
    for k in 0..=n {
        // j beyond n - k only meets zero entries of row n.
        let rhs: Rat = (0..=n - k)
            .map(|j| int(n + 1) / int(k + 1) * binom(k + j, j) * &c.a[j as usize] * at(d, n, k + j))
            .sum();
        t.record(&params(1, k), &at(d, n + 1, k + 1), &rhs);
    }
    if n >= 1 {
        for k in 0..=n {
            let rhs: Rat = (k..=n)
                .map(|l| binom(n - 1, l - 1) * (c.f_coef)(n - l + 1) * at(d, l - 1, k - 1))
                .sum();
            t.record(&params(2, k), &(at(d, n, k) - (c.shifted)(n - 1, k)), &rhs);
        }
    }
    for k in 0..=n {
        let rhs: Rat = (k..=n)
            .map(|l| binom(n, l - 1) * (c.f_coef)(n - l + 1) * at(d, l - 1, k - 1))
            .sum();
        t.record(&params(3, k), &(int(k) * at(d, n, k)), &rhs);
    }
}

fn az_recurrences_w2(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    let c = cauchy_numbers_integral(top + 1);
    for &m in &g.m {
        let a: Vec<Rat> = c
            .iter()
            .enumerate()
            .map(|(j, cj)| cj * pow(&mr(m), j))
            .collect();
        for &r in &g.r {
            let w = whitney2_rows(m, &int(r), top + 1);
            // <g', f> = <r e^(rt), f> = r W
            let shifted = |n: i64, k: i64| int(r) * at(&w, n, k);
            let f_coef = |j: i64| pow(&mr(m), (j - 1) as usize);
            let case = AzCase {
                d: &w,
                a: &a,
                f_coef: &f_coef,
                shifted: &shifted,
            };
            for n in g.ns() {
                az_record(&mut t, &case, n as i64, &[("m", m as i64), ("r", r)]);
            }
        }
    }
    Ok(t)
}

fn az_recurrences_w1(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    let b = classical_seq(SeqKind::BernoulliNum, top + 1);
    for &m in &g.m {
        let a: Vec<Rat> = b
            .iter()
            .enumerate()
            .map(|(j, bj)| bj * pow(&mr(m), j))
            .collect();
        let neg_m = -mr(m);
        for &r in &g.r {
            let w = whitney1_rows(m, &int(r), top + 1);
            // entry (n, k) of <g', f> with g' = -r g / (1 + mt)
            let shifted = |n: i64, k: i64| -> Rat {
                let s: Rat = (0..=n)
                    .map(|l| {
                        binom(n, l)
                            * factorial((n - l) as usize)
                            * at(&w, l, k)
                            * pow(&neg_m, (n - l) as usize)
                    })
                    .sum();
                -int(r) * s
            };
            let f_coef = |j: i64| pow(&neg_m, (j - 1) as usize) * factorial((j - 1) as usize);
            let case = AzCase {
                d: &w,
                a: &a,
                f_coef: &f_coef,
                shifted: &shifted,
            };
            for n in g.ns() {
                az_record(&mut t, &case, n as i64, &[("m", m as i64), ("r", r)]);
            }
        }
    }
    Ok(t)
}

fn orthogonality(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let w2 = whitney2_rows(m, &int(r), top);
            let w1 = whitney1_rows(m, &int(r), top);
            let arr2 = ExpRiordan::whitney2(m, &int(r), top);
            let inv = riordan_inverse(&arr2)?.rows();
            let prod = riordan_mul(&ExpRiordan::whitney1(m, &int(r), top), &arr2)?.rows();
            for n in g.ns() {
                for s in 0..=n {
                    let p = [("n", n as i64), ("k", s as i64), ("m", m as i64), ("r", r)];
                    let delta = if s == n { Rat::one() } else { Rat::zero() };
                    let a: Rat = (s..=n).map(|i| &w2[n][i] * &w1[i][s]).sum();
                    let b: Rat = (s..=n).map(|i| &w1[n][i] * &w2[i][s]).sum();
                    t.record(&p, &a, &delta);
                    t.record(&p, &b, &delta);
                    t.record(&p, &inv[n][s], &w1[n][s]);
                    t.record(&p, &prod[n][s], &delta);
                }
            }
        }
    }
    Ok(t)
}

const INVERSE_TRIALS: u64 = 4;

fn random_seq(seed: u64, len: usize) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len).map(|_| int(rng.gen_range(-20..=20))).collect()
}

fn transform(rows: &[Vec<Rat>], v: &[Rat]) -> Vec<Rat> {
    rows.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn inverse_relation(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let w2 = whitney2_rows(m, &int(r), top);
            let w1 = whitney1_rows(m, &int(r), top);
            for trial in 0..INVERSE_TRIALS {
                let seed = (u64::from(m) << 40) ^ ((r as u64) << 20) ^ trial;
                let f = random_seq(seed, top + 1);
                let g_of_f = transform(&w2, &f);
                let back = transform(&w1, &g_of_f);
                let gs = random_seq(seed ^ 0x9e37_79b9, top + 1);
                let f_of_g = transform(&w1, &gs);
                let back_g = transform(&w2, &f_of_g);
                for n in g.ns() {
                    let p = [
                        ("n", n as i64),
                        ("m", m as i64),
                        ("r", r),
                        ("trial", trial as i64),
                    ];
                    t.record(&p, &back[n], &f[n]);
                    t.record(&p, &back_g[n], &gs[n]);
                }
            }
        }
    }
    Ok(t)
}

fn power_in_dowling(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let w1 = whitney1_rows(m, &int(r), top);
            let d = dowlings(m, r, top);
            for n in g.ns() {
                let p = [("n", n as i64), ("m", m as i64), ("r", r)];
                let all: Poly = (0..=n).map(|k| d[k].scale(&w1[n][k])).sum();
                t.record(&p, &all, &x_pow(n));
                let lower: Poly = (0..n).map(|k| d[k].scale(&w1[n][k])).sum();
                t.record(&p, &d[n], &(&x_pow(n) - &lower));
            }
        }
    }
    Ok(t)
}

/// The `(n+1) x (n+1)` matrix with first row `1, x, ..., x^n` and entry
/// `w(j, i-1)` in row `i >= 1`, column `j`.
pub fn determinantal_matrix(w1: &[Vec<Rat>], n: usize) -> Vec<Vec<Poly>> {
    let mut rows = vec![(0..=n).map(x_pow).collect::<Vec<_>>()];
    for i in 1..=n {
        rows.push(
            (0..=n)
                .map(|j| Poly::constant(at(w1, j as i64, i as i64 - 1)))
                .collect(),
        );
    }
    rows
}

fn determinantal(g: &Grid) -> Result<Tally> {
    let mut t = Tally::default();
    let top = g.n.1;
    for &m in &g.m {
        for &r in &g.r {
            let w1 = whitney1_rows(m, &int(r), top);
            let d = dowlings(m, r, top);
            for n in g.ns() {
                let det = det_bareiss(determinantal_matrix(&w1, n));
                let signed = if n % 2 == 1 { -&det } else { det };
                t.record(
                    &[("n", n as i64), ("m", m as i64), ("r", r)],
                    &signed,
                    &d[n],
                );
            }
        }
    }
    Ok(t)
}

fn standard() -> Grid {
    Grid::standard()
}

fn up_to_6() -> Grid {
    Grid::standard().with_max_n(6)
}

fn up_to_10() -> Grid {
    Grid::standard().with_max_n(10)
}

fn entry(
    name: &'static str,
    statement: &'static str,
    mode: Mode,
    eval: fn(&Grid) -> Result<Tally>,
) -> IdentityCheck {
    IdentityCheck {
        name,
        statement,
        mode,
        grid: standard,
        eval,
        variants: Vec::new(),
    }
}

pub(super) fn entries() -> Vec<IdentityCheck> {
    use Mode::*;
    let mut v = vec![
        entry(
            "egf-whitney2",
            "sum_n W(n,k) z^n/n! = e^(rz) ((e^(mz)-1)/m)^k / k!",
            NumericAtPoints,
            egf_whitney2,
        ),
        entry(
            "egf-dowling",
            "sum_n D(n,u) t^n/n! = exp(rt + u (e^(mt)-1)/m)",
            PolynomialInU,
            egf_dowling,
        ),
        entry(
            "lemma-grammar-dowling",
            "G^n (y x^r) = y x^r D(n, x^m)",
            BivariatePolynomial,
            lemma_grammar_dowling,
        ),
        entry(
            "dowling-shift",
            "D_{r+l}(n,u) = sum_k C(n,k) l^(n-k) D_r(k,u)",
            PolynomialInU,
            dowling_shift,
        ),
        entry(
            "dowling-shift-l1",
            "D_{r+1}(n,u) = sum_k C(n,k) D_r(k,u), and its inversion",
            PolynomialInU,
            dowling_shift_l1,
        ),
        entry(
            "spivey",
            "D(n+h,u) = sum_k sum_j C(n,k) D(k,u) W(h,j) u^j (jm)^(n-k)",
            PolynomialInU,
            spivey,
        ),
        entry(
            "whitney-convolution",
            "W(n+h,s) = sum_k sum_j C(n,k) W(h,j) W(k,s-j) (jm)^(n-k)",
            NumericAtPoints,
            whitney_convolution,
        ),
        entry(
            "dowling-recurrence",
            "D(n+1,u) = r D(n,u) + u sum_j C(n,j) m^(n-j) D(j,u)",
            PolynomialInU,
            dowling_recurrence,
        ),
        entry(
            "whitney-recurrence",
            "W(n+1,k) = r W(n,k) + sum_j C(n,j) m^(n-j) W(j,k-1)",
            NumericAtPoints,
            whitney_recurrence,
        ),
        entry(
            "r-shift-s",
            "D_r(n,u) = sum_j C(n,j) (r-s)^(n-j) D_s(j,u)",
            PolynomialInU,
            r_shift_s,
        ),
        entry(
            "whitney-r-shift",
            "W_r(n,k) = sum_{j=0}^n C(n,j) (r-s)^(n-j) W_s(j,k)",
            NumericAtPoints,
            whitney_r_shift,
        ),
        entry(
            "touchard-binomial",
            "T_n(x+y) = sum_k C(n,k) T_k(x) T_(n-k)(y)",
            BivariatePolynomial,
            touchard_binomial,
        ),
        entry(
            "umbral-inverse-T",
            "sum_k S(n,k) That_k(x) = x^n = sum_k s(n,k) T_k(x)",
            PolynomialInU,
            umbral_inverse_t,
        ),
        entry(
            "delta-ops",
            "(E^m-I)/m That_n = n That_(n-1); ln(1+mD)^(1/m) T_n = n T_(n-1)",
            PolynomialInU,
            delta_ops,
        ),
        entry(
            "binomial-recurrences",
            "That_n(x) = x That_(n-1)(x-m); T_n = x(1+mD) T_(n-1)",
            PolynomialInU,
            binomial_recurrences,
        ),
        entry(
            "sheffer-binomial-D",
            "D_n(x+y) = sum_k C(n,k) D_k(x) T_(n-k)(y)",
            BivariatePolynomial,
            sheffer_binomial_d,
        ),
        entry(
            "dowling-umbral-inverse",
            "Dhat_n = E^(-r) That_n; sum_k W(n,k) Dhat_k = x^n = sum_k w(n,k) D_k",
            PolynomialInU,
            dowling_umbral_inverse,
        ),
        entry(
            "dowlstir",
            "D_n(x) = sum_k r(r-m)...(r-(k-1)m)/k! D^k T_n(x)",
            PolynomialInU,
            dowlstir,
        ),
        entry(
            "bernoulli-to-dowling",
            "B_n(x) = sum_k sum_{l>=k} C(n,l) B_(n-l) w(l,k) D_k(x)",
            PolynomialInU,
            bernoulli_to_dowling,
        ),
        entry(
            "euler-to-dowling",
            "E_n(x) = sum_k sum_{l>=k} C(n,l) E_(n-l) w(l,k) D_k(x)",
            PolynomialInU,
            euler_to_dowling,
        ),
        entry(
            "dowling-to-bernoulli",
            "D_n(x) = 1/(n+1) sum C(n+1,l+1) C(l+1,s+1) W(n-l,k) m^(l-s) T_(s+1)(1) B_(l-s) B_k(x)",
            PolynomialInU,
            dowling_to_bernoulli,
        ),
        entry(
            "dowling-to-euler",
            "D_n(x) = sum_k (1/2 sum_l C(n,l) W(n-l,k) T_l(1) + 1/2 W(n,k)) E_k(x)",
            PolynomialInU,
            dowling_to_euler,
        ),
        entry(
            "az-recurrences-W2",
            "A-sequence, <g',f> and k d(n,k) recurrences for W with c_j m^j",
            NumericAtPoints,
            az_recurrences_w2,
        ),
        entry(
            "az-recurrences-W1",
            "A-sequence, <g',f> and k d(n,k) recurrences for w with B_j m^j",
            NumericAtPoints,
            az_recurrences_w1,
        ),
        entry(
            "orthogonality",
            "sum_i W(n,i) w(i,s) = sum_i w(n,i) W(i,s) = delta(n,s)",
            NumericAtPoints,
            orthogonality,
        ),
        entry(
            "inverse-relation",
            "f_n = sum_s w(n,s) g_s iff g_n = sum_s W(n,s) f_s",
            NumericAtPoints,
            inverse_relation,
        ),
        entry(
            "power-in-dowling",
            "x^n = sum_k w(n,k) D_k(x)",
            PolynomialInU,
            power_in_dowling,
        ),
        entry(
            "determinantal",
            "D_n(x) = (-1)^n det of the x-row / w-column matrix",
            PolynomialInU,
            determinantal,
        ),
    ];
    for e in &mut v {
        match e.name {
            "dowling-to-bernoulli" => {
                e.grid = up_to_6;
                e.variants.push(Variant {
                    name: "riordan-kernel",
                    description: "constants from the connection array with kernel e^(O(t))-1",
                    eval: dowling_to_bernoulli_riordan,
                });
            }
            "dowling-to-euler" => e.variants.push(Variant {
                name: "riordan-kernel",
                description: "constants from the connection array",
                eval: dowling_to_euler_riordan,
            }),
            "whitney-r-shift" => e.variants.push(Variant {
                name: "proof-line",
                description: "inner sum over j = 0..r",
                eval: whitney_r_shift_proof_line,
            }),
            "delta-ops" => e.variants.push(Variant {
                name: "printed-series",
                description: "log operator with coefficients (-1)^k m^(k-1) (k-1)!",
                eval: delta_ops_printed,
            }),
            "inverse-relation" => e.grid = up_to_10,
            _ => {}
        }
    }
    v
}
