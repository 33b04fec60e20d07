//! Riordan arrays of the two kinds, their product, A- and Z-sequences.

use whitney::rat::{fmt_rat, int};
use whitney::riordan::{
    a_sequence, exp_z_sequence, riordan_inverse, riordan_mul, ExpRiordan, OrdinaryRiordan,
};

fn show(label: &str, v: &[whitney::Rat]) {
    let s: Vec<String> = v.iter().map(fmt_rat).collect();
    println!("{label}: {}", s.join(", "));
}

fn main() {
    let (m, r, order) = (2u32, int(3), 8);
    let w2 = ExpRiordan::whitney2(m, &r, order);
    let w1 = ExpRiordan::whitney1(m, &r, order);

    println!(
        "inverse of W2 is W1: {}",
        riordan_inverse(&w2).unwrap() == w1
    );
    println!(
        "W1 * W2 is identity: {}",
        riordan_mul(&w1, &w2).unwrap() == ExpRiordan::identity(order)
    );

    show("A(W2)", &a_sequence(&w2, 6).unwrap().0);
    show("A(W1)", &a_sequence(&w1, 6).unwrap().0);
    show("exp Z(W2)", &exp_z_sequence(&w2, 6).unwrap().0);

    let ord = OrdinaryRiordan::from_exp_pair(&w2);
    let az = ord.sequences(5).unwrap();
    show("ordinary A", &az.a.0);
    show("ordinary Z", &az.z.0);
}
