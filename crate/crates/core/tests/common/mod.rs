#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strongclique::diamond::is_diamond_free;
use strongclique::generate::{random_clique_simplicial, random_diamond_free, random_triangle_free};
use strongclique::graph::is_connected;
use strongclique::io::parse_graph6_all;
use strongclique::Graph;

pub const CORPUS: &str = include_str!("../data/graphs_upto8.g6");

/// Every graph on 1 to 8 vertices, one per isomorphism class.
pub fn small_graphs() -> Vec<Graph> {
    parse_graph6_all(CORPUS).expect("corpus parses")
}

pub fn connected_diamond_free_small() -> Vec<Graph> {
    small_graphs()
        .into_iter()
        .filter(|g| is_connected(g) && is_diamond_free(g).answer)
        .collect()
}

/// Add random pairs to `g` while it stays diamond-free.
fn perturb(g: &Graph, tries: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = g.edge_list();
    let n = g.n();
    let mut current = g.clone();
    for _ in 0..tries {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || current.has_edge(u, v) {
            continue;
        }
        edges.push((u, v));
        let next = Graph::new(n, edges.iter().copied()).unwrap();
        if is_diamond_free(&next).answer {
            current = next;
        } else {
            edges.pop();
        }
    }
    current
}

/// 1000 seeded diamond-free graphs on 4 to 16 vertices: sparse and dense
/// greedy diamond-free graphs, triangle-free graphs, clique simplicial
/// graphs, and clique simplicial graphs with a few extra edges.
pub fn random_diamond_free_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..1000u64)
        .map(|i| {
            let n = 4 + (i as usize % 13);
            let max = n * (n - 1) / 2;
            let g = match i % 5 {
                0 => random_diamond_free(n, rng.gen_range(0..=n + 2), i).unwrap(),
                1 => random_diamond_free(n, rng.gen_range(0..=max), i).unwrap(),
                2 => random_triangle_free(n, rng.gen_range(0.1..0.6), i).unwrap(),
                3 => random_clique_simplicial(1 + i as usize % 5, 2, 4, i).unwrap(),
                _ => {
                    let base = random_clique_simplicial(1 + i as usize % 5, 2, 4, i).unwrap();
                    perturb(&base, 3, &mut rng)
                }
            };
            assert!(g.n() <= 16);
            g
        })
        .collect()
}

pub fn chvatal() -> Graph {
    Graph::new(
        12,
        [
            (0, 1),
            (0, 4),
            (0, 6),
            (0, 9),
            (1, 2),
            (1, 5),
            (1, 7),
            (2, 3),
            (2, 6),
            (2, 8),
            (3, 4),
            (3, 7),
            (3, 9),
            (4, 5),
            (4, 8),
            (5, 10),
            (5, 11),
            (6, 10),
            (6, 11),
            (7, 8),
            (7, 11),
            (8, 10),
            (9, 10),
            (9, 11),
        ],
    )
    .unwrap()
}

pub fn cube() -> Graph {
    Graph::new(
        8,
        [
            (0, 1),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 7),
            (2, 3),
            (2, 6),
            (3, 5),
            (4, 5),
            (4, 7),
            (5, 6),
            (6, 7),
        ],
    )
    .unwrap()
}
