//! Diamond detection and the maximal cliques of diamond-free graphs.
//!
//! In a diamond-free graph every edge `uv` lies in exactly one maximal
//! clique, namely `{u, v} ∪ (N(u) ∩ N(v))`. Both routines below are built on
//! that common-neighbourhood merge.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ffree::Pattern;
use crate::graph::Graph;
use crate::verdict::{Certificate, Verdict};

/// Maximal cliques of a diamond-free graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueSet {
    /// Cliques with at least one edge, each ascending.
    pub cliques: Vec<Vec<usize>>,
    /// `(u, v)` with `u < v` to the index of its clique.
    pub edge_index: HashMap<(usize, usize), usize>,
    /// Isolated vertices; each is a maximal clique of size one.
    pub isolated: Vec<usize>,
}

impl CliqueSet {
    pub fn clique_of(&self, u: usize, v: usize) -> Option<&[usize]> {
        let key = (u.min(v), u.max(v));
        self.edge_index.get(&key).map(|&i| self.cliques[i].as_slice())
    }

    /// All maximal cliques, isolated vertices last.
    pub fn all(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.cliques
            .iter()
            .cloned()
            .chain(self.isolated.iter().map(|&v| vec![v]))
    }

    /// Number of maximal cliques including isolated vertices.
    pub fn len(&self) -> usize {
        self.cliques.len() + self.isolated.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn common_neighbors(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Whether `g` has no induced diamond (`K4` minus an edge). On failure the
/// certificate names the four vertices: the shared edge first, then the two
/// non-adjacent tips.
pub fn is_diamond_free(g: &Graph) -> Verdict {
    match find_diamond(g) {
        Some(witness) => Verdict::no(Certificate::InducedSubgraph {
            vertices: witness,
            pattern: Pattern::Diamond,
        }),
        None => Verdict::yes(),
    }
}

pub(crate) fn find_diamond(g: &Graph) -> Option<[usize; 4]> {
    let sorted = g.index_sorted();
    for (u, v) in sorted.edges() {
        let common = common_neighbors(sorted.neighbors(u), sorted.neighbors(v));
        if let Some((x, y)) = sorted.find_non_edge(&common) {
            return Some([u, v, x, y]);
        }
    }
    None
}

/// Returns `Ok` only if `g` is diamond-free.
pub fn require_diamond_free(g: &Graph) -> Result<()> {
    match find_diamond(g) {
        Some(witness) => Err(Error::NotDiamondFree { witness }),
        None => Ok(()),
    }
}

/// Maximal cliques of a diamond-free graph, one per unassigned edge in
/// lexicographic edge order.
///
/// Each candidate clique is re-checked; a non-adjacent pair in a common
/// neighbourhood, or an edge claimed by two different cliques, is reported as
/// [`Error::NotDiamondFree`] with a diamond witness.
pub fn maximal_cliques_diamond_free(g: &Graph) -> Result<CliqueSet> {
    let sorted = g.index_sorted();
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut edge_index: HashMap<(usize, usize), usize> = HashMap::new();
    for (u, v) in sorted.edges() {
        if edge_index.contains_key(&(u, v)) {
            continue;
        }
        let common = common_neighbors(sorted.neighbors(u), sorted.neighbors(v));
        if let Some((x, y)) = sorted.find_non_edge(&common) {
            return Err(Error::NotDiamondFree { witness: [u, v, x, y] });
        }
        let mut clique = common;
        clique.push(u);
        clique.push(v);
        clique.sort_unstable();
        let index = cliques.len();
        for (i, &a) in clique.iter().enumerate() {
            for &b in &clique[i + 1..] {
                if let Some(&other) = edge_index.get(&(a, b)) {
                    let witness = split_witness(&sorted, a, b, &cliques[other], &clique);
                    return Err(Error::NotDiamondFree { witness });
                }
                edge_index.insert((a, b), index);
            }
        }
        cliques.push(clique);
    }
    let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).collect();
    Ok(CliqueSet {
        cliques,
        edge_index,
        isolated,
    })
}

/// Two distinct maximal cliques sharing the edge `ab` contain non-adjacent
/// `p`, `q` off the shared part, and `{a, b, p, q}` is a diamond.
fn split_witness(g: &Graph, a: usize, b: usize, first: &[usize], second: &[usize]) -> [usize; 4] {
    for &p in first.iter().filter(|p| !second.contains(p)) {
        for &q in second.iter().filter(|q| !first.contains(q)) {
            if !g.has_edge(p, q) {
                return [a, b, p, q];
            }
        }
    }
    unreachable!("two distinct maximal cliques always differ by a non-edge")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn rook3() -> Graph {
        Graph::from_predicate(9, |u, v| u / 3 == v / 3 || u % 3 == v % 3)
    }

    /// Brute force over all 4-subsets.
    fn has_induced_diamond(g: &Graph) -> bool {
        let n = g.n();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q = [a, b, c, d];
                        let mut edges = 0;
                        for i in 0..4 {
                            for j in i + 1..4 {
                                edges += g.has_edge(q[i], q[j]) as usize;
                            }
                        }
                        if edges == 5 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn diamond_itself() {
        let v = is_diamond_free(&diamond());
        assert!(!v.answer);
        let Certificate::InducedSubgraph { mut vertices, .. } = v.certificate.clone() else {
            panic!("expected induced witness");
        };
        vertices.sort_unstable();
        assert_eq!(vertices, [0, 1, 2, 3]);
        assert!(v.verify(&diamond()));
    }

    #[test]
    fn k4_has_no_induced_diamond() {
        let k4 = Graph::complete(4);
        assert!(!has_induced_diamond(&k4));
        assert!(is_diamond_free(&k4).answer);
    }

    #[test]
    fn triangle_free_graphs_are_diamond_free() {
        let petersen = Graph::new(
            10,
            (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
        )
        .unwrap();
        assert!(is_diamond_free(&petersen).answer);
    }

    #[test]
    fn cliques_of_small_graphs() {
        let triangle = Graph::complete(3);
        let set = maximal_cliques_diamond_free(&triangle).unwrap();
        assert_eq!(set.cliques, vec![vec![0, 1, 2]]);

        let c5 = Graph::new(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let set = maximal_cliques_diamond_free(&c5).unwrap();
        assert_eq!(set.cliques.len(), 5);
        assert!(set.cliques.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn rook_rows_and_columns() {
        let set = maximal_cliques_diamond_free(&rook3()).unwrap();
        let mut cliques = set.cliques.clone();
        cliques.sort();
        assert_eq!(
            cliques,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 6],
                vec![1, 4, 7],
                vec![2, 5, 8],
                vec![3, 4, 5],
                vec![6, 7, 8]
            ]
        );
        assert_eq!(set.clique_of(4, 1), Some(&[1, 4, 7][..]));
    }

    #[test]
    fn isolated_vertices_kept_apart() {
        let g = Graph::new(4, [(0, 1)]).unwrap();
        let set = maximal_cliques_diamond_free(&g).unwrap();
        assert_eq!(set.isolated, vec![2, 3]);
        assert_eq!(set.len(), 3);
    }

    #[test]
    fn diamond_rejected() {
        assert!(matches!(
            maximal_cliques_diamond_free(&diamond()),
            Err(Error::NotDiamondFree { .. })
        ));
    }

    #[test]
    fn hidden_diamond_found_through_edge_conflict() {
        // K4 on {0,1,2,3} plus vertex 4 adjacent to 2 and 3: the edge 2-3 is
        // first claimed by the K4, the diamond {2,3,0,4} surfaces later.
        let mut edges: Vec<_> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        edges.extend([(2, 4), (3, 4)]);
        let g = Graph::new(5, edges).unwrap();
        match maximal_cliques_diamond_free(&g) {
            Err(Error::NotDiamondFree { witness }) => {
                assert_eq!(Pattern::of_induced(&g, &witness), Some(Pattern::Diamond));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
