//! Second- and first-kind triangles for m = 2, r = 3, and their product.

use whitney::matrix::{mat_mul, square_from_rows};
use whitney::rat::int;
use whitney::triangles::Triangle;

fn main() {
    let (m, r, n) = (2, int(3), 6);
    let w2 = Triangle::whitney2(m, &r, n);
    let w1 = Triangle::whitney1(m, &r, n);
    println!("W_{{2,3}}(n,k):\n{w2}");
    println!("w_{{2,3}}(n,k):\n{w1}");

    let prod = mat_mul(&square_from_rows(w1.rows()), &square_from_rows(w2.rows()));
    let is_identity = prod.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, v)| *v == int((i == j) as i64))
    });
    println!("w * W = I: {is_identity}");
}
