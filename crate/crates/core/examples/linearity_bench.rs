//! Wall-clock scaling of the edge simplicial test as the input doubles.
//!
//! Run with `cargo run --release --example linearity_bench`.

use strongclique::timing::{doubling_ratios, scaling_table, BenchFamily};

fn main() {
    let sizes = [10_000, 20_000, 40_000, 80_000, 160_000];
    for family in [BenchFamily::CliqueSimplicial, BenchFamily::Biclique, BenchFamily::Rook] {
        let rows = scaling_table(family, &sizes, 5, 1);
        let ratios = doubling_ratios(&rows);
        println!("{}:", family.name());
        for (i, row) in rows.iter().enumerate() {
            let ratio = if i == 0 {
                String::new()
            } else {
                format!("  x{:.2} per doubling", ratios[i - 1])
            };
            println!("  n+m={:>7}  median {:>9.1?}{ratio}", row.size(), row.median);
        }
    }
}
