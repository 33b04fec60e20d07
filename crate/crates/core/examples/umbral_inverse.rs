//! [m]-Touchard polynomials and their umbral inverses.

use whitney::poly::Poly;
use whitney::triangles::{touchard, touchard_hat};

/// Substitutes x^k -> q_k in p.
fn umbral(p: &Poly, q: &[Poly]) -> Poly {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| q[k].scale(c))
        .sum()
}

fn main() {
    let m = 2;
    let t: Vec<Poly> = (0..=6).map(|n| touchard(m, n)).collect();
    let th: Vec<Poly> = (0..=6).map(|n| touchard_hat(m, n)).collect();
    for n in 0..=6 {
        println!("T_{n}  = {}", t[n]);
        println!("T^_{n} = {}", th[n]);
        println!("  T^_{n}(T) = {}", umbral(&th[n], &t));
    }
}
