//! The linear-time edge simplicial test, its stable set and its
//! certificates.
//!
//! Run with `cargo run --example edge_simplicial`.

use strongclique::generate::{biclique, random_clique_simplicial};
use strongclique::{companion_multigraph, degree_greedy_stable_set, is_edge_simplicial, Graph};

fn report(name: &str, g: &Graph) -> strongclique::Result<()> {
    let verdict = is_edge_simplicial(g)?;
    let s = degree_greedy_stable_set(g);
    let companion = companion_multigraph(g, &s.members)?;
    println!("{name}: n={} m={}", g.n(), g.m());
    println!("  stable set S = {:?}", s.sorted_members());
    println!(
        "  G_S has {} edges, parallel edges: {}",
        companion.multigraph.m(),
        companion.multigraph.has_parallel_edges()
    );
    println!("  edge simplicial: {} ({})", verdict.answer, verdict.certificate);
    Ok(())
}

fn main() -> strongclique::Result<()> {
    report("glued cliques", &random_clique_simplicial(6, 2, 4, 11)?)?;
    report("K_{2,3}", &biclique(2, 3))?;
    // a triangle whose every vertex carries a pendant: no simplicial clique
    // contains the triangle edges
    let net = Graph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])?;
    report("net", &net)?;
    Ok(())
}
