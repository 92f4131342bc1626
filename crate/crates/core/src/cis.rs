//! CIS recognition for diamond-free graphs.
//!
//! A connected diamond-free graph is CIS exactly when it is clique
//! simplicial, a complete bipartite graph `K_{a,b}` with `a, b >= 2`, or the
//! rook's graph `L(K_{n,n})` with `n >= 3`. A graph is CIS iff each of its
//! components is, so classification runs per component.

use std::fmt;

use crate::diamond::{maximal_cliques_diamond_free, require_diamond_free};
use crate::edge_simplicial::is_edge_simplicial_linear;
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite_signature, connected_components, is_connected, Graph};
use crate::oracle::is_edge_simplicial_bruteforce;
use crate::verdict::join;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentClass {
    CliqueSimplicial,
    /// `K_{a,b}` with `2 <= a <= b`.
    CompleteBipartite(usize, usize),
    /// `L(K_{n,n})`, `n >= 3`.
    Rook(usize),
    NotCis,
}

impl fmt::Display for ComponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentClass::CliqueSimplicial => write!(f, "clique_simplicial"),
            ComponentClass::CompleteBipartite(a, b) => write!(f, "complete_bipartite m={a} n={b}"),
            ComponentClass::Rook(n) => write!(f, "rook n={n}"),
            ComponentClass::NotCis => write!(f, "not_cis"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedComponent {
    /// Vertices of the component in the input graph, ascending.
    pub vertices: Vec<usize>,
    pub class: ComponentClass,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub components: Vec<ClassifiedComponent>,
}

impl Classification {
    pub fn is_cis(&self) -> bool {
        self.components.iter().all(|c| c.class != ComponentClass::NotCis)
    }

    /// Re-derive each tag by direct checks on the component.
    pub fn verify(&self, g: &Graph) -> bool {
        let components = connected_components(g);
        if components.len() != self.components.len() {
            return false;
        }
        components.iter().zip(&self.components).all(|(vs, c)| {
            if *vs != c.vertices {
                return false;
            }
            let h = g.induced(vs);
            let bipartite = matches!(
                complete_bipartite_signature(&h),
                Ok(Some((a, b))) if a >= 2 && b >= 2
            );
            let rook = matches!(is_rook_graph(&h), Ok(Some(_)));
            let simplicial = is_edge_simplicial_bruteforce(&h);
            match c.class {
                ComponentClass::CompleteBipartite(a, b) => {
                    complete_bipartite_signature(&h) == Ok(Some((a, b))) && a >= 2
                }
                ComponentClass::Rook(n) => is_rook_graph(&h) == Ok(Some(n)),
                ComponentClass::CliqueSimplicial => simplicial,
                ComponentClass::NotCis => !bipartite && !rook && !simplicial,
            }
        })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|c| format!("{} [{}]", c.class, join(&c.vertices)))
            .collect();
        write!(f, "{}", parts.join("; "))
    }
}

fn exact_sqrt(x: usize) -> Option<usize> {
    let mut r = (x as f64).sqrt() as usize;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    (r * r == x).then_some(r)
}

/// Side length `n` if `g` is the rook's graph `L(K_{n,n})` with `n >= 3`.
///
/// The check is structural: `n^2` vertices, `2(n-1)`-regular, exactly `2n`
/// maximal cliques all of size `n`, every vertex in exactly two of them, and
/// the cliques meeting pairwise in at most one vertex along a `K_{n,n}`
/// intersection pattern.
pub fn is_rook_graph(g: &Graph) -> Result<Option<usize>> {
    if !is_connected(g) {
        return Err(Error::NotConnected);
    }
    let Some(side) = exact_sqrt(g.n()) else {
        return Ok(None);
    };
    if side < 3 || (0..g.n()).any(|v| g.degree(v) != 2 * (side - 1)) {
        return Ok(None);
    }
    require_diamond_free(g)?;
    let cliques = maximal_cliques_diamond_free(g)?.cliques;
    if cliques.len() != 2 * side || cliques.iter().any(|c| c.len() != side) {
        return Ok(None);
    }
    let mut membership: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, clique) in cliques.iter().enumerate() {
        for &v in clique {
            membership[v].push(i);
        }
    }
    if membership.iter().any(|m| m.len() != 2) {
        return Ok(None);
    }
    let mut shared = vec![0usize; cliques.len() * cliques.len()];
    let mut edges = Vec::new();
    for m in &membership {
        let (a, b) = (m[0], m[1]);
        shared[a * cliques.len() + b] += 1;
        edges.push((a, b));
    }
    if shared.iter().any(|&count| count > 1) {
        return Ok(None);
    }
    let intersection = Graph::new(cliques.len(), edges)?;
    if !is_connected(&intersection) {
        return Ok(None);
    }
    Ok((complete_bipartite_signature(&intersection)? == Some((side, side))).then_some(side))
}

/// Classify every component of a diamond-free graph.
///
/// Per component, in this order: components on at most two vertices are
/// clique simplicial; `K_{a,b}` with `a, b >= 2`; the rook's graph; clique
/// simplicial by the linear edge simplicial test; otherwise not CIS.
pub fn classify_diamond_free_cis(g: &Graph) -> Result<Classification> {
    require_diamond_free(g)?;
    let components = connected_components(g)
        .into_iter()
        .map(|vertices| {
            let class = if vertices.len() <= 2 {
                ComponentClass::CliqueSimplicial
            } else {
                classify_connected(&g.induced(&vertices))?
            };
            Ok(ClassifiedComponent { vertices, class })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Classification { components })
}

fn classify_connected(h: &Graph) -> Result<ComponentClass> {
    if let Some((a, b)) = complete_bipartite_signature(h)? {
        if a >= 2 {
            return Ok(ComponentClass::CompleteBipartite(a, b));
        }
    }
    if let Some(n) = is_rook_graph(h)? {
        return Ok(ComponentClass::Rook(n));
    }
    if is_edge_simplicial_linear(h).answer {
        return Ok(ComponentClass::CliqueSimplicial);
    }
    Ok(ComponentClass::NotCis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rook(n: usize) -> Graph {
        Graph::from_predicate(n * n, |u, v| u / n == v / n || u % n == v % n)
    }

    fn biclique(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn disjoint_union(parts: &[Graph]) -> Graph {
        let n = parts.iter().map(Graph::n).sum();
        let mut edges = Vec::new();
        let mut base = 0;
        for p in parts {
            edges.extend(p.edges().map(|(u, v)| (u + base, v + base)));
            base += p.n();
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn rook_recognition() {
        assert_eq!(is_rook_graph(&rook(3)).unwrap(), Some(3));
        assert_eq!(is_rook_graph(&rook(5)).unwrap(), Some(5));
        assert_eq!(is_rook_graph(&cycle(4)).unwrap(), None);
        assert_eq!(is_rook_graph(&Graph::complete(9)).unwrap(), None);
        assert_eq!(is_rook_graph(&Graph::empty(9)), Err(Error::NotConnected));
    }

    #[test]
    fn rook_lookalikes_rejected() {
        // 4-regular on 9 vertices but full of diamonds.
        let circ = Graph::new(9, (0..9).flat_map(|i| [(i, (i + 1) % 9), (i, (i + 2) % 9)])).unwrap();
        assert!(matches!(is_rook_graph(&circ), Err(Error::NotDiamondFree { .. })));
        // 2(n-1)-regular on n^2 vertices with the wrong clique structure.
        let k33_twice = disjoint_union(&[biclique(3, 3), biclique(3, 3)]);
        assert_eq!(is_rook_graph(&k33_twice), Err(Error::NotConnected));
        let c16 = Graph::new(
            16,
            (0..16).flat_map(|i| [(i, (i + 1) % 16), (i, (i + 5) % 16), (i, (i + 8) % 16)]),
        )
        .unwrap();
        assert!(!matches!(is_rook_graph(&c16), Ok(Some(_))));
    }

    #[test]
    fn relabelled_rook_recognised() {
        let perm = [4, 7, 0, 8, 2, 5, 1, 3, 6];
        let r = rook(3);
        let g = Graph::new(9, r.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert_eq!(is_rook_graph(&g).unwrap(), Some(3));
    }

    #[test]
    fn three_families_in_one_graph() {
        let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        let g = disjoint_union(&[biclique(2, 2), rook(3), star]);
        let c = classify_diamond_free_cis(&g).unwrap();
        let tags: Vec<_> = c.components.iter().map(|c| c.class).collect();
        assert_eq!(
            tags,
            vec![
                ComponentClass::CompleteBipartite(2, 2),
                ComponentClass::Rook(3),
                ComponentClass::CliqueSimplicial
            ]
        );
        assert!(c.is_cis());
        assert!(c.verify(&g));
    }

    #[test]
    fn c5_is_not_cis() {
        let c = classify_diamond_free_cis(&cycle(5)).unwrap();
        assert_eq!(c.components[0].class, ComponentClass::NotCis);
        assert!(!c.is_cis());
        assert!(c.verify(&cycle(5)));
    }

    #[test]
    fn single_vertex() {
        let c = classify_diamond_free_cis(&Graph::empty(1)).unwrap();
        assert_eq!(c.components[0].class, ComponentClass::CliqueSimplicial);
        assert!(c.is_cis());
    }

    #[test]
    fn families() {
        for a in 2..=6 {
            for b in a..=6 {
                let c = classify_diamond_free_cis(&biclique(a, b)).unwrap();
                assert_eq!(c.components[0].class, ComponentClass::CompleteBipartite(a, b));
            }
        }
        for n in 3..=6 {
            let c = classify_diamond_free_cis(&rook(n)).unwrap();
            assert_eq!(c.components[0].class, ComponentClass::Rook(n));
        }
    }

    #[test]
    fn diamonds_rejected() {
        let diamond = Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(
            classify_diamond_free_cis(&diamond),
            Err(Error::NotDiamondFree { .. })
        ));
    }
}
