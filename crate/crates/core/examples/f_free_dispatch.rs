//! CIS recognition for graphs avoiding a four-vertex pattern, dispatched on
//! the pattern.
//!
//! Run with `cargo run --example f_free_dispatch`.

use strongclique::generate::{cycle, petersen, rook};
use strongclique::{cis_for_f_free, Graph, Oracle, Pattern};

fn main() -> strongclique::Result<()> {
    let oracle = Oracle::default();
    let cases: [(&str, Graph, Pattern); 5] = [
        ("rook(3)", rook(3), Pattern::Diamond),
        ("C5", cycle(5), Pattern::Paw),
        ("petersen", petersen(), Pattern::K4),
        ("C6 complement", cycle(6).complement(), Pattern::TwoK2),
        ("C4", cycle(4), Pattern::P4),
    ];
    for (name, g, p) in cases {
        match cis_for_f_free(&g, p, &oracle) {
            Ok(v) => println!("{name}, {p}-free: cis={} ({})", v.answer, v.certificate),
            Err(e) => println!("{name}: {e}"),
        }
    }
    Ok(())
}
