//! Classifying diamond-free graphs into the three CIS families, checked
//! against the exhaustive oracle.
//!
//! Run with `cargo run --example classify_cis`.

use strongclique::generate::{biclique, cycle, random_clique_simplicial, rook};
use strongclique::{classify_diamond_free_cis, Graph, Oracle};

fn main() -> strongclique::Result<()> {
    let oracle = Oracle::default();
    let graphs: Vec<(&str, Graph)> = vec![
        ("K_{3,4}", biclique(3, 4)),
        ("rook(4)", rook(4)),
        ("glued cliques", random_clique_simplicial(5, 2, 5, 3)?),
        ("C5", cycle(5)),
        ("K_{2,2} + rook(3)", disjoint_union(&biclique(2, 2), &rook(3))),
    ];
    for (name, g) in graphs {
        let c = classify_diamond_free_cis(&g)?;
        let brute = oracle.is_cis_bruteforce(&g)?;
        println!("{name}: {c}");
        println!("  cis={} oracle={} ({})", c.is_cis(), brute.answer, brute.certificate);
        let (alpha, omega) = oracle.alpha_omega(&g)?;
        println!("  alpha*omega = {alpha}*{omega} = {} vs n = {}", alpha * omega, g.n());
    }
    Ok(())
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a.edges().chain(b.edges().map(|(u, v)| (u + shift, v + shift)));
    Graph::new(a.n() + b.n(), edges).expect("valid edges")
}
