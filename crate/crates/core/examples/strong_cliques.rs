//! Exhaustive strong-clique questions on small graphs: strongness with a
//! dominating stable set as witness, and the decision suite.
//!
//! Run with `cargo run --example strong_cliques`.

use strongclique::generate::cycle;
use strongclique::{all_p4_settled, Graph, Oracle};

fn main() -> strongclique::Result<()> {
    let oracle = Oracle::default();

    // P4: 0-1-2-3. The middle edge is dominated by {0, 3}.
    let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)])?;
    for clique in [[0, 1], [1, 2]] {
        let r = oracle.is_strong_clique(&p4, &clique)?;
        println!("P4 clique {clique:?}: strong={} witness={:?}", r.strong, r.witness);
    }
    println!("P4 p4_settled: {}", all_p4_settled(&p4).answer);

    let c6 = cycle(6);
    let suite = oracle.decision_suite(&c6, Some(&[vec![0, 1], vec![2, 3], vec![4, 5]]))?;
    println!("C6:");
    println!("  strong clique exists: {}", suite.strong_clique_existence);
    println!("  strong cliques cover V: {}", suite.strong_clique_vertex_cover);
    println!("  given partition strong: {:?}", suite.strong_clique_partition);
    println!("  strong partition: {:?}", suite.strong_partition);
    Ok(())
}
