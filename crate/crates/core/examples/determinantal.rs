//! r-Dowling polynomials as determinants over first-kind numbers.

use num_traits::{One, Zero};
use whitney::matrix::det_bareiss;
use whitney::poly::Poly;
use whitney::rat::int;
use whitney::triangles::{dowling, whitney1_rows};
use whitney::Rat;

fn main() {
    let (m, r) = (2u32, int(1));
    let w1 = whitney1_rows(m, &r, 6);
    for n in 0..=6 {
        // row 0 holds 1, x, ..., x^n; row i holds w(j, i-1) in column j
        let mat: Vec<Vec<Poly>> = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| match i {
                        0 => Poly::monomial(Rat::one(), j),
                        _ => Poly::constant(w1[j].get(i - 1).cloned().unwrap_or_else(Rat::zero)),
                    })
                    .collect()
            })
            .collect();
        let det = det_bareiss(mat);
        let d = if n % 2 == 1 { -&det } else { det };
        println!("n={n}: {d}   [{}]", d == dowling(m, &r, n));
    }
}
