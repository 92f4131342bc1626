//! Edge-list and graph6 reading and writing, including symbolic vertex
//! names.
//!
//! Run with `cargo run --example formats`.

use strongclique::generate::petersen;
use strongclique::io::{emit_edge_list, emit_graph6, parse_auto, parse_graph6_all};
use strongclique::{Format, GraphDocument};

fn main() -> strongclique::Result<()> {
    let doc = parse_auto("# a labelled square\nn 4\na b\nb c\nc d\nd a\n")?;
    println!(
        "symbolic edge list: n={} m={} names={:?}",
        doc.graph.n(),
        doc.graph.m(),
        doc.names
    );
    print!("as graph6: {}", doc.emit(Format::Graph6));

    let g6 = emit_graph6(&petersen());
    println!("petersen graph6: {g6}");
    let back = parse_auto(&g6)?;
    assert_eq!(emit_graph6(&back.graph), g6);

    let many = parse_graph6_all("A_\nBw\nD?{\n")?;
    println!(
        "graph6 batch: {:?}",
        many.iter().map(|g| (g.n(), g.m())).collect::<Vec<_>>()
    );

    let out = GraphDocument::new(many[2].clone(), Format::EdgeList);
    print!("{}", emit_edge_list(&out, &["decoded from D?{".to_string()]));
    Ok(())
}
