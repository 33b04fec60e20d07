use whitney::oracle::{count_r_stirling_pairs, count_whitney_pairs};
use whitney::poly::Poly;
use whitney::rat::int;
use whitney::riordan::{connection_constants, ExpRiordan, ShefferPair};
use whitney::triangles::{family, FamilyKind, FamilyParams, Triangle};

fn expand(consts: &Triangle, basis: &[Poly], n: usize) -> Poly {
    (0..=n)
        .map(|k| &basis[k].clone() * &Poly::constant(consts.get(n, k)))
        .sum()
}

#[test]
fn sheffer_rows_are_dowling_polynomials() {
    for m in 1..=3 {
        for r in 0..=3 {
            let polys = ShefferPair::dowling(m, &int(r), 8).polys().unwrap();
            let params = FamilyParams::new(m, int(r));
            for (n, p) in polys.iter().enumerate() {
                assert_eq!(p, &family(FamilyKind::Dowling, &params, n).unwrap());
            }
        }
    }
}

#[test]
fn connection_constants_rebuild_dowling() {
    const N: usize = 6;
    let params = FamilyParams::new(1, int(0));
    let bern: Vec<Poly> = (0..=N)
        .map(|n| family(FamilyKind::Bernoulli, &params, n).unwrap())
        .collect();
    let euler: Vec<Poly> = (0..=N)
        .map(|n| family(FamilyKind::Euler, &params, n).unwrap())
        .collect();
    for m in 1..=3 {
        for r in 0..=2 {
            let d = ShefferPair::dowling(m, &int(r), N + 1);
            let dp = FamilyParams::new(m, int(r));
            let to_b = connection_constants(&d, &ShefferPair::bernoulli(N + 1), N).unwrap();
            let to_e = connection_constants(&d, &ShefferPair::euler(N + 1), N).unwrap();
            for n in 0..=N {
                let want = family(FamilyKind::Dowling, &dp, n).unwrap();
                assert_eq!(expand(&to_b, &bern, n), want, "bernoulli n={n} m={m} r={r}");
                assert_eq!(expand(&to_e, &euler, n), want, "euler n={n} m={m} r={r}");
            }
        }
    }
}

#[test]
fn whitney_at_m1_matches_r_stirling_oracle() {
    for r in 0..=3usize {
        let t = Triangle::whitney2(1, &int(r as i64), 6);
        for n in 0..=6 {
            for k in 0..=n {
                let a = count_r_stirling_pairs(n, k, r).unwrap();
                let b = count_whitney_pairs(n, k, 1, r).unwrap();
                assert_eq!(a, b);
                assert_eq!(t.get(n, k), int(a as i64));
            }
        }
    }
}

#[test]
fn array_rows_evaluate_to_touchard() {
    let arr = ExpRiordan::whitney2(2, &int(0), 7);
    for (n, row) in arr.rows().into_iter().enumerate() {
        let p = Poly::new(row);
        let t = family(FamilyKind::TouchardM, &FamilyParams::new(2, int(0)), n).unwrap();
        assert_eq!(p, t);
    }
}
