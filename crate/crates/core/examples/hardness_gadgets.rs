//! The two gadget constructions that turn 3-colourability of a triangle-free
//! graph of minimum degree 3 into strong-clique questions, with all seven
//! statements evaluated by the oracle.
//!
//! Run with `cargo run --release --example hardness_gadgets`.

use strongclique::generate::{biclique, grotzsch, petersen};
use strongclique::reductions::check_proposition_equivalences;
use strongclique::{build_g_prime, validate_class_g, Oracle};

fn main() -> strongclique::Result<()> {
    let oracle = Oracle::default();
    for (name, g) in [
        ("K_{3,3}", biclique(3, 3)),
        ("petersen", petersen()),
        ("grotzsch", grotzsch()),
    ] {
        assert!(validate_class_g(&g).answer);
        let gp = build_g_prime(&g)?;
        println!(
            "{name}: G' has {} vertices, distinguished clique {:?}",
            gp.gadget.n(),
            gp.distinguished_clique
        );
        let report = check_proposition_equivalences(&g, &oracle)?;
        println!("  not 3-colourable: {}", report.not_3_colorable());
        for line in report.to_string().lines() {
            println!("  {line}");
        }
    }
    Ok(())
}
