//! Diamond detection and maximal-clique listing on diamond-free graphs.
//!
//! Run with `cargo run --example diamond_free_cliques`.

use strongclique::generate::{petersen, rook};
use strongclique::{is_diamond_free, maximal_cliques_diamond_free, Graph};

fn main() -> strongclique::Result<()> {
    // Two triangles sharing the edge 1-2.
    let diamond = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])?;
    let v = is_diamond_free(&diamond);
    println!("diamond: diamond_free={} certificate: {}", v.answer, v.certificate);

    for (name, g) in [("rook(3)", rook(3)), ("petersen", petersen())] {
        let cliques = maximal_cliques_diamond_free(&g)?;
        println!(
            "{name}: {} vertices, {} edges, {} maximal cliques",
            g.n(),
            g.m(),
            cliques.len()
        );
        // every edge lies in exactly one maximal clique
        let (u, w) = g.edges().next().expect("non-empty");
        println!(
            "  clique of edge {u}-{w}: {:?}",
            cliques.clique_of(u, w).expect("edge is covered")
        );
    }
    Ok(())
}
