//! Iterating the derivation y -> y x^m, x -> x on y x^r.

use num_traits::One;
use whitney::grammar::{derive_n, whitney_row_from_grammar, Grammar, XYPoly};
use whitney::rat::fmt_rat;
use whitney::Rat;

fn main() {
    let (m, r) = (2u32, 3u32);
    let g = Grammar::whitney(m);
    let seed = XYPoly::term(Rat::one(), 1, r);
    for n in 0..=4 {
        println!("D^{n}(y x^{r}) = {}", derive_n(&g, &seed, n));
    }
    for n in 0..=6 {
        let row = whitney_row_from_grammar(m, r, n).unwrap();
        let row: Vec<String> = row.iter().map(fmt_rat).collect();
        println!("n={n}: {}", row.join(" "));
    }
}
