//! Exact series work: the r-Dowling EGF at a fixed u, and reversion.

use whitney::egf::{egf_compose, egf_exp, egf_reverse, egf_reverse_lagrange, Egf};
use whitney::rat::{frac, int};
use whitney::triangles::dowling;

fn main() {
    let (m, r, order) = (2u32, int(1), 8);
    let u = frac(1, 2);

    // exp(r t + u (e^{mt} - 1)/m)
    let inner = Egf::t(order)
        .scale(&r)
        .add(&Egf::expm1_scaled(&int(m as i64), order).scale(&u));
    let series = egf_exp(&inner).unwrap();
    println!("EGF coefficients at u = 1/2: {series}");
    for n in 0..=order {
        println!(
            "  n={n}: {} vs D_n(1/2) = {}",
            series.coeff(n),
            dowling(m, &r, n).eval(&u)
        );
    }

    let f = Egf::expm1_scaled(&int(2), order);
    let fbar = egf_reverse(&f).unwrap();
    println!("reverse of (e^(2t)-1)/2: {fbar}");
    println!(
        "same by Lagrange: {}",
        egf_reverse_lagrange(&f).unwrap() == fbar
    );
    println!("f(fbar(t)) = {}", egf_compose(&f, &fbar).unwrap());
}
