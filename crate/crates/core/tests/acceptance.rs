//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Reference values that the library also computes are rebuilt here from
//! scratch (plain recurrences, direct integrals) so the two paths share no code.

#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::{One, Zero};
use whitney::grammar::whitney_row_from_grammar;
use whitney::identities::{self, Grid, Status};
use whitney::matrix::det_bareiss;
use whitney::oracle::{count_mr_partitions, count_whitney_pairs, list_whitney_pairs};
use whitney::poly::Poly;
use whitney::rat::{frac, int};
use whitney::riordan::{a_sequence, riordan_inverse, riordan_mul, ExpRiordan};
use whitney::triangles::{
    dowling, m_stirling1_row, m_stirling2_row, whitney2_row, whitney2_row_egf,
};
use whitney::Rat;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn at(row: &[Rat], k: usize) -> Rat {
    row.get(k).cloned().unwrap_or_else(Rat::zero)
}

/// W(n,k) by the triangular recurrence, integers only.
fn ref_whitney2(m: i64, r: i64, n_max: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![1i64]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![0i64; n + 1];
        for (k, slot) in row.iter_mut().enumerate() {
            let left = if k >= 1 {
                prev.get(k - 1).copied().unwrap_or(0)
            } else {
                0
            };
            let up = prev.get(k).copied().unwrap_or(0);
            *slot = left + (k as i64 * m + r) * up;
        }
        rows.push(row);
    }
    rows
}

/// w(n,k) from w(n,k) = w(n-1,k-1) - ((n-1)m + r) w(n-1,k).
fn ref_whitney1(m: i64, r: i64, n_max: usize) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![1i64]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![0i64; n + 1];
        for (k, slot) in row.iter_mut().enumerate() {
            let left = if k >= 1 {
                prev.get(k - 1).copied().unwrap_or(0)
            } else {
                0
            };
            let up = prev.get(k).copied().unwrap_or(0);
            *slot = left - ((n as i64 - 1) * m + r) * up;
        }
        rows.push(row);
    }
    rows
}

fn ac1() -> Outcome {
    let mut cells = 0;
    for m in 1..=3u32 {
        for r in 0..=3u32 {
            let rr = int(r as i64);
            let reference = ref_whitney2(m as i64, r as i64, 7);
            for n in 0..=7usize {
                let rec = whitney2_row(m, &rr, n);
                let gram = whitney_row_from_grammar(m, r, n).map_err(|e| e.to_string())?;
                let egf = whitney2_row_egf(m, &rr, n);
                for k in 0..=n {
                    let want = int(reference[n][k]);
                    let pairs =
                        count_whitney_pairs(n, k, m, r as usize).map_err(|e| e.to_string())?;
                    let mr = count_mr_partitions(n, k, m, r as usize).map_err(|e| e.to_string())?;
                    let got = [
                        at(&rec, k),
                        at(&gram, k),
                        at(&egf, k),
                        int(pairs as i64),
                        int(mr as i64),
                    ];
                    ensure(got.iter().all(|g| *g == want), || {
                        format!("n={n} k={k} m={m} r={r}: expected {want}, got {got:?}")
                    })?;
                    cells += 1;
                }
            }
        }
    }
    Ok(format!("{cells} cells, five methods agree"))
}

fn ac2() -> Outcome {
    for (n, k, m, r, want) in [(2usize, 2usize, 2u32, 2usize, 1usize), (2, 1, 2, 3, 8)] {
        let rr = int(r as i64);
        let value = at(&whitney2_row(m, &rr, n), k);
        ensure(value == int(want as i64), || {
            format!("W({n},{k}) with m={m} r={r} is {value}")
        })?;
        let count = count_whitney_pairs(n, k, m, r).map_err(|e| e.to_string())?;
        ensure(count as usize == want, || {
            format!("count {count}, want {want}")
        })?;
        let list = list_whitney_pairs(n, k, m, r).map_err(|e| e.to_string())?;
        let distinct: BTreeSet<_> = list.iter().cloned().collect();
        ensure(list.len() == want && distinct.len() == want, || {
            format!(
                "listing has {} entries, {} distinct",
                list.len(),
                distinct.len()
            )
        })?;
        ensure(list.iter().all(|p| p.is_valid(n as u32, k, m, r)), || {
            "invalid structure listed".into()
        })?;
    }
    Ok("W=1 with 1 structure, W=8 with 8 structures".into())
}

fn ac3() -> Outcome {
    const ORDER: usize = 13;
    for m in 1..=3u32 {
        for r in 0..=3i64 {
            let rr = int(r);
            let w2 = ExpRiordan::whitney2(m, &rr, ORDER);
            let w1 = ExpRiordan::whitney1(m, &rr, ORDER);
            let inv = riordan_inverse(&w2).map_err(|e| e.to_string())?;
            let reference = ref_whitney1(m as i64, r, ORDER - 1);
            let inv_rows = inv.rows();
            for (n, row) in reference.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    ensure(at(&inv_rows[n], k) == int(*v), || {
                        format!(
                            "inverse entry ({n},{k}) m={m} r={r}: {} vs {v}",
                            at(&inv_rows[n], k)
                        )
                    })?;
                }
            }
            let prod = riordan_mul(&w1, &w2).map_err(|e| e.to_string())?;
            for (n, row) in prod.rows().iter().enumerate() {
                for k in 0..=n {
                    let want = if n == k { Rat::one() } else { Rat::zero() };
                    ensure(at(row, k) == want, || {
                        format!("product entry ({n},{k}) m={m} r={r}")
                    })?;
                }
            }
        }
    }
    Ok("inverse and product laws hold through row 12".into())
}

fn ac4() -> Outcome {
    let start = Instant::now();
    let reports = identities::run_all().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(reports.len() == identities::names().len(), || {
        "registry not fully evaluated".into()
    })?;
    let expected_variants = [
        ("delta-ops", "printed-series", Status::Fail),
        ("dowling-to-bernoulli", "riordan-kernel", Status::Pass),
        ("dowling-to-euler", "riordan-kernel", Status::Pass),
        ("whitney-r-shift", "proof-line", Status::Fail),
    ];
    let mut variant_lines = Vec::new();
    for rep in &reports {
        ensure(rep.status == Status::Pass, || {
            format!("{} failed: {:?}", rep.name, rep.counterexample)
        })?;
        for v in &rep.variants {
            let want = expected_variants
                .iter()
                .find(|(n, vn, _)| *n == rep.name && *vn == v.name)
                .map(|e| e.2)
                .ok_or_else(|| format!("unexpected variant {}/{}", rep.name, v.name))?;
            ensure(v.status == want, || {
                format!("variant {}/{} is {}", rep.name, v.name, v.status)
            })?;
            variant_lines.push(format!("{}/{}={}", rep.name, v.name, v.status));
        }
    }
    ensure(variant_lines.len() == expected_variants.len(), || {
        "missing variant report".into()
    })?;
    ensure(elapsed.as_secs() < 600, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "{} entries pass in {:.1}s; {}",
        reports.len(),
        elapsed.as_secs_f64(),
        variant_lines.join(" ")
    ))
}

fn ac5() -> Outcome {
    let grid = Grid {
        n: (0, 6),
        h: (0, 6),
        m: vec![1, 2, 3],
        r: (0..=3).collect(),
        ..Grid::standard()
    };
    let mut parts = Vec::new();
    for name in ["spivey", "touchard-binomial", "sheffer-binomial-D"] {
        let check = identities::find(name).map_err(|e| e.to_string())?;
        ensure(check.mode != identities::Mode::NumericAtPoints, || {
            format!("{name} is not polynomial")
        })?;
        let rep = identities::run_check(name, Some(grid.clone())).map_err(|e| e.to_string())?;
        ensure(rep.status == Status::Pass, || {
            format!("{name}: {:?}", rep.counterexample)
        })?;
        parts.push(format!("{name}({})", rep.grid_size));
    }
    Ok(parts.join(" "))
}

/// c_n = integral over [0,1] of x(x-1)...(x-n+1), from the expanded product.
fn ref_cauchy(n: usize) -> Rat {
    let mut coeffs = vec![Rat::one()];
    for i in 0..n {
        let mut next = vec![Rat::zero(); coeffs.len() + 1];
        for (d, c) in coeffs.iter().enumerate() {
            next[d + 1] += c.clone();
            next[d] -= c * int(i as i64);
        }
        coeffs = next;
    }
    coeffs
        .iter()
        .enumerate()
        .map(|(d, c)| c / int(d as i64 + 1))
        .fold(Rat::zero(), |a, b| a + b)
}

/// Bernoulli numbers with B_1 = -1/2, from sum_{k<=n} C(n+1,k) B_k = 0.
fn ref_bernoulli(n_max: usize) -> Vec<Rat> {
    let mut b = vec![Rat::one()];
    for n in 1..=n_max {
        let mut c = Rat::one();
        let mut acc = Rat::zero();
        for (k, bk) in b.iter().enumerate() {
            acc += &c * bk;
            c = c * int((n + 1 - k) as i64) / int(k as i64 + 1);
        }
        b.push(-acc / int(n as i64 + 1));
    }
    b
}

fn ac6() -> Outcome {
    const J: usize = 8;
    let bern = ref_bernoulli(J);
    let cauchy: Vec<Rat> = (0..=J).map(ref_cauchy).collect();
    ensure(cauchy[1] == frac(1, 2) && cauchy[2] == frac(-1, 6), || {
        "cauchy reference".into()
    })?;
    for m in 1..=3u32 {
        let mm = int(m as i64);
        let pw = |j: usize| (0..j).fold(Rat::one(), |a, _| a * &mm);
        for r in 0..=3i64 {
            let a2 = a_sequence(&ExpRiordan::whitney2(m, &int(r), J + 1), J)
                .map_err(|e| e.to_string())?;
            let a1 = a_sequence(&ExpRiordan::whitney1(m, &int(r), J + 1), J)
                .map_err(|e| e.to_string())?;
            for j in 0..=J {
                ensure(at(&a2.0, j) == &cauchy[j] * pw(j), || {
                    format!("W2 A_{j} m={m} r={r}")
                })?;
                ensure(at(&a1.0, j) == &bern[j] * pw(j), || {
                    format!("W1 A_{j} m={m} r={r}")
                })?;
            }
        }
    }
    Ok(format!("j <= {J}, m in 1..3, r in 0..3"))
}

fn ac7() -> Outcome {
    let mut count = 0;
    for m in 1..=2i64 {
        for r in 0..=2i64 {
            let w1 = ref_whitney1(m, r, 8);
            let w2 = ref_whitney2(m, r, 8);
            for n in 0..=8usize {
                let size = n + 1;
                let mut mat = vec![vec![Poly::zero(); size]; size];
                for (j, slot) in mat[0].iter_mut().enumerate() {
                    *slot = Poly::monomial(Rat::one(), j);
                }
                for i in 1..size {
                    for j in 0..size {
                        let v = w1[j].get(i - 1).copied().unwrap_or(0);
                        mat[i][j] = Poly::constant(int(v));
                    }
                }
                let det = det_bareiss(mat);
                let signed = if n % 2 == 1 { -&det } else { det };
                let want = Poly::new(w2[n].iter().map(|&v| int(v)).collect());
                ensure(signed == want, || {
                    format!("n={n} m={m} r={r}: {signed} vs {want}")
                })?;
                ensure(want == dowling(m as u32, &int(r), n), || {
                    format!("library D_{n} m={m} r={r}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} determinants match"))
}

fn ac8() -> Outcome {
    const N: usize = 12;
    let stirling = ref_whitney2(1, 0, N);
    for m in 1..=3u32 {
        let rows2: Vec<Vec<Rat>> = (0..=N).map(|n| m_stirling2_row(m, n)).collect();
        let rows1: Vec<Vec<Rat>> = (0..=N).map(|n| m_stirling1_row(m, n)).collect();
        for n in 0..=N {
            for k in 0..=n {
                let want =
                    int(stirling[n][k]) * (0..n - k).fold(Rat::one(), |a, _| a * int(m as i64));
                ensure(at(&rows2[n], k) == want, || format!("S^[{m}]({n},{k})"))?;
                let sum = (k..=n).fold(Rat::zero(), |acc, i| {
                    acc + at(&rows2[n], i) * at(&rows1[i], k)
                });
                let delta = if n == k { Rat::one() } else { Rat::zero() };
                ensure(sum == delta, || {
                    format!("inversion n={n} k={k} m={m}: {sum}")
                })?;
            }
        }
    }
    Ok(format!("n <= {N}, m in 1..3"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("AC1 four-way agreement of W(n,k)", ac1),
        ("AC2 worked examples and oracle listings", ac2),
        ("AC3 Riordan inverse and product", ac3),
        ("AC4 identity registry on default grids", ac4),
        ("AC5 Spivey and binomial-type identities", ac5),
        ("AC6 A-sequences vs Cauchy and Bernoulli", ac6),
        ("AC7 determinantal form of D_n", ac7),
        ("AC8 scaling and umbral inversion", ac8),
    ];
    let mut failed = 0;
    for (label, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {label} [{secs:.2}s] {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {label} [{secs:.2}s] {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
