//! Lists the structures counted by W_{m,r}(n,k) and compares counts.

use whitney::oracle::{count_mr_partitions, count_whitney_pairs, list_whitney_pairs};
use whitney::rat::int;
use whitney::triangles::whitney2_row;

fn main() {
    for (n, k, m, r) in [(2, 2, 2, 2), (2, 1, 2, 3)] {
        let pairs = list_whitney_pairs(n, k, m, r).unwrap();
        println!("n={n} k={k} m={m} r={r}: {} structures", pairs.len());
        for p in &pairs {
            println!("  {p}");
        }
    }

    let (m, r) = (3u32, 2usize);
    for n in 0..=5 {
        let row = whitney2_row(m, &int(r as i64), n);
        let counts: Vec<String> = (0..=n)
            .map(|k| {
                let a = count_whitney_pairs(n, k, m, r).unwrap();
                let b = count_mr_partitions(n, k, m, r).unwrap();
                assert_eq!(int(a as i64), row[k]);
                assert_eq!(a, b);
                a.to_string()
            })
            .collect();
        println!("n={n}: {}", counts.join(" "));
    }
}
