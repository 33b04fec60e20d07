//! Runs the identity registry on reduced grids and prints the report table.

use whitney::identities::{format_table, run_all_with};

fn main() {
    let reports = run_all_with(&|g| g.with_max_n(5).with_max_h(4)).unwrap();
    print!("{}", format_table(&reports));
}
