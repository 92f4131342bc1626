//! CIS recognition inside hereditary classes defined by one forbidden
//! induced subgraph on at most four vertices.

use std::fmt;
use std::str::FromStr;

use crate::cis::classify_diamond_free_cis;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};
use crate::oracle::{dominating_stable_set, maximal_cliques, Oracle};
use crate::verdict::{Certificate, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pattern {
    K4,
    Diamond,
    C4,
    Paw,
    Claw,
    P4,
    Empty4,
    CoDiamond,
    TwoK2,
    CoPaw,
    CoClaw,
    K3,
    P3,
    CoP3,
    Empty3,
    K2,
    Empty2,
    K1,
}

impl Pattern {
    /// The eleven graphs on four vertices.
    pub const FOUR_VERTEX: [Pattern; 11] = [
        Pattern::K4,
        Pattern::Diamond,
        Pattern::C4,
        Pattern::Paw,
        Pattern::Claw,
        Pattern::P4,
        Pattern::Empty4,
        Pattern::CoDiamond,
        Pattern::TwoK2,
        Pattern::CoPaw,
        Pattern::CoClaw,
    ];

    pub const ALL: [Pattern; 18] = [
        Pattern::K4,
        Pattern::Diamond,
        Pattern::C4,
        Pattern::Paw,
        Pattern::Claw,
        Pattern::P4,
        Pattern::Empty4,
        Pattern::CoDiamond,
        Pattern::TwoK2,
        Pattern::CoPaw,
        Pattern::CoClaw,
        Pattern::K3,
        Pattern::P3,
        Pattern::CoP3,
        Pattern::Empty3,
        Pattern::K2,
        Pattern::Empty2,
        Pattern::K1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::K4 => "K4",
            Pattern::Diamond => "diamond",
            Pattern::C4 => "C4",
            Pattern::Paw => "paw",
            Pattern::Claw => "claw",
            Pattern::P4 => "P4",
            Pattern::Empty4 => "empty4",
            Pattern::CoDiamond => "co-diamond",
            Pattern::TwoK2 => "2K2",
            Pattern::CoPaw => "co-paw",
            Pattern::CoClaw => "co-claw",
            Pattern::K3 => "K3",
            Pattern::P3 => "P3",
            Pattern::CoP3 => "co-P3",
            Pattern::Empty3 => "empty3",
            Pattern::K2 => "K2",
            Pattern::Empty2 => "empty2",
            Pattern::K1 => "K1",
        }
    }

    pub fn order(self) -> usize {
        match self {
            Pattern::K1 => 1,
            Pattern::K2 | Pattern::Empty2 => 2,
            Pattern::K3 | Pattern::P3 | Pattern::CoP3 | Pattern::Empty3 => 3,
            _ => 4,
        }
    }

    pub fn complement(self) -> Pattern {
        match self {
            Pattern::K4 => Pattern::Empty4,
            Pattern::Empty4 => Pattern::K4,
            Pattern::Diamond => Pattern::CoDiamond,
            Pattern::CoDiamond => Pattern::Diamond,
            Pattern::C4 => Pattern::TwoK2,
            Pattern::TwoK2 => Pattern::C4,
            Pattern::Paw => Pattern::CoPaw,
            Pattern::CoPaw => Pattern::Paw,
            Pattern::Claw => Pattern::CoClaw,
            Pattern::CoClaw => Pattern::Claw,
            Pattern::P4 => Pattern::P4,
            Pattern::K3 => Pattern::Empty3,
            Pattern::Empty3 => Pattern::K3,
            Pattern::P3 => Pattern::CoP3,
            Pattern::CoP3 => Pattern::P3,
            Pattern::K2 => Pattern::Empty2,
            Pattern::Empty2 => Pattern::K2,
            Pattern::K1 => Pattern::K1,
        }
    }

    /// A fixed labelled copy of the pattern.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            Pattern::K4 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            Pattern::Diamond => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
            Pattern::C4 => &[(0, 1), (1, 2), (2, 3), (0, 3)],
            Pattern::Paw => &[(0, 1), (0, 2), (0, 3), (1, 2)],
            Pattern::Claw => &[(0, 1), (0, 2), (0, 3)],
            Pattern::P4 => &[(0, 1), (1, 2), (2, 3)],
            Pattern::Empty4 => &[],
            Pattern::CoDiamond => &[(2, 3)],
            Pattern::TwoK2 => &[(0, 2), (1, 3)],
            Pattern::CoPaw => &[(1, 3), (2, 3)],
            Pattern::CoClaw => &[(1, 2), (1, 3), (2, 3)],
            Pattern::K3 => &[(0, 1), (0, 2), (1, 2)],
            Pattern::P3 => &[(0, 1), (1, 2)],
            Pattern::CoP3 => &[(0, 2)],
            Pattern::Empty3 => &[],
            Pattern::K2 => &[(0, 1)],
            Pattern::Empty2 => &[],
            Pattern::K1 => &[],
        }
    }

    pub fn graph(self) -> Graph {
        Graph::new(self.order(), self.edges().iter().copied()).expect("pattern edges are valid")
    }

    /// Symmetric adjacency matrix of [`Pattern::graph`].
    pub fn adjacency(self) -> [[bool; 4]; 4] {
        let mut m = [[false; 4]; 4];
        for &(u, v) in self.edges() {
            m[u][v] = true;
            m[v][u] = true;
        }
        m
    }

    /// The pattern induced by `vertices` in `g`, for one to four distinct
    /// vertices.
    pub fn of_induced(g: &Graph, vertices: &[usize]) -> Option<Pattern> {
        let k = vertices.len();
        if k == 0 || k > 4 || vertices.iter().any(|&v| v >= g.n()) {
            return None;
        }
        let mut degrees = [0usize; 4];
        let mut edges = 0;
        for i in 0..k {
            if vertices[i + 1..].contains(&vertices[i]) {
                return None;
            }
            for j in i + 1..k {
                if g.has_edge(vertices[i], vertices[j]) {
                    degrees[i] += 1;
                    degrees[j] += 1;
                    edges += 1;
                }
            }
        }
        let degrees = &mut degrees[..k];
        degrees.sort_unstable();
        Some(match (k, edges, &*degrees) {
            (1, _, _) => Pattern::K1,
            (2, 0, _) => Pattern::Empty2,
            (2, _, _) => Pattern::K2,
            (3, 0, _) => Pattern::Empty3,
            (3, 1, _) => Pattern::CoP3,
            (3, 2, _) => Pattern::P3,
            (3, _, _) => Pattern::K3,
            (_, 0, _) => Pattern::Empty4,
            (_, 1, _) => Pattern::CoDiamond,
            (_, 2, [1, 1, 1, 1]) => Pattern::TwoK2,
            (_, 2, _) => Pattern::CoPaw,
            (_, 3, [0, 2, 2, 2]) => Pattern::CoClaw,
            (_, 3, [1, 1, 1, 3]) => Pattern::Claw,
            (_, 3, _) => Pattern::P4,
            (_, 4, [2, 2, 2, 2]) => Pattern::C4,
            (_, 4, _) => Pattern::Paw,
            (_, 5, _) => Pattern::Diamond,
            _ => Pattern::K4,
        })
    }

    /// Whether some vertex of the pattern is adjacent to all others.
    fn has_dominating_vertex(self) -> bool {
        matches!(self, Pattern::K4 | Pattern::Diamond | Pattern::Paw | Pattern::Claw)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Pattern::ALL
            .into_iter()
            .find(|p| p.name().to_ascii_lowercase() == key)
            .ok_or_else(|| {
                let names: Vec<&str> = Pattern::ALL.iter().map(|p| p.name()).collect();
                Error::BadParams(format!("unknown pattern '{s}' (expected one of {})", names.join(", ")))
            })
    }
}

/// Whether `g` has an induced copy of the four-vertex pattern `p`; the
/// certificate holds the copy.
pub fn contains_induced_4(g: &Graph, p: Pattern) -> Verdict {
    assert_eq!(p.order(), 4, "{p} is not a four-vertex pattern");
    match find_induced(g, p) {
        Some(w) => Verdict::with(
            true,
            Certificate::InducedSubgraph {
                vertices: [w[0], w[1], w[2], w[3]],
                pattern: p,
            },
        ),
        None => Verdict::with(false, Certificate::None),
    }
}

/// Vertices inducing `p`, if any.
pub fn find_induced(g: &Graph, p: Pattern) -> Option<Vec<usize>> {
    let g = g.index_sorted();
    if p.has_dominating_vertex() {
        return find_with_centre(&g, p.edges().len() - 3);
    }
    let k = p.order();
    let target_edges = p.edges().len();
    let target_non_edges = k * (k - 1) / 2 - target_edges;
    let mut chosen = Vec::with_capacity(k);
    fn extend(
        g: &Graph,
        p: Pattern,
        chosen: &mut Vec<usize>,
        edges: usize,
        non_edges: usize,
        limits: (usize, usize),
    ) -> bool {
        if chosen.len() == p.order() {
            return Pattern::of_induced(g, chosen) == Some(p);
        }
        let start = chosen.last().map_or(0, |&v| v + 1);
        for v in start..g.n() {
            let new_edges = chosen.iter().filter(|&&u| g.has_edge(u, v)).count();
            let new_non = chosen.len() - new_edges;
            if edges + new_edges > limits.0 || non_edges + new_non > limits.1 {
                continue;
            }
            chosen.push(v);
            if extend(g, p, chosen, edges + new_edges, non_edges + new_non, limits) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    extend(&g, p, &mut chosen, 0, 0, (target_edges, target_non_edges)).then_some(chosen)
}

/// A vertex with three neighbours spanning exactly `inner` edges.
fn find_with_centre(g: &Graph, inner: usize) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nbrs = g.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                let ab = g.has_edge(a, b) as usize;
                if ab > inner {
                    continue;
                }
                for &c in &nbrs[j + 1..] {
                    if ab + g.has_edge(a, c) as usize + g.has_edge(b, c) as usize == inner {
                        return Some(vec![v, a, b, c]);
                    }
                }
            }
        }
    }
    None
}

/// Whether `g` has no induced `P4`, by recursive decomposition: a graph on
/// two or more vertices is a cograph iff it or its complement is
/// disconnected with every part a cograph.
pub fn is_cograph(g: &Graph) -> bool {
    if g.n() <= 1 {
        return true;
    }
    let parts = connected_components(g);
    if parts.len() > 1 {
        return parts.iter().all(|p| is_cograph(&g.induced(p)));
    }
    let co = g.complement();
    let parts = connected_components(&co);
    if parts.len() > 1 {
        return parts.iter().all(|p| is_cograph(&co.induced(p)));
    }
    false
}

/// CIS test for an `f`-free graph, chosen by `f`.
///
/// The input must avoid `f` ([`Error::NotFFree`] otherwise). Co-patterns
/// are handled on the complement, since a graph is CIS exactly when its
/// complement is; their certificates are wrapped in
/// [`Certificate::Complement`]. Claw-free and co-claw-free graphs, and the
/// patterns on at most three vertices other than `K3` and its complement,
/// go to the brute-force oracle and are subject to its cap.
pub fn cis_for_f_free(g: &Graph, f: Pattern, oracle: &Oracle) -> Result<Verdict> {
    if let Some(witness) = find_induced(g, f) {
        return Err(Error::NotFFree { pattern: f, witness });
    }
    match f {
        Pattern::K4 => Ok(all_maximal_cliques_strong(g)),
        Pattern::C4 => Ok(all_maximal_cliques_simplicial(g)),
        Pattern::Diamond | Pattern::K3 => Ok(classifier_verdict(g)?),
        Pattern::Empty4 => Ok(on_complement(all_maximal_cliques_strong(&g.complement()))),
        Pattern::TwoK2 => Ok(on_complement(all_maximal_cliques_simplicial(&g.complement()))),
        Pattern::CoDiamond | Pattern::Empty3 => Ok(on_complement(classifier_verdict(&g.complement())?)),
        // paw-free (and co-paw-free) graphs are CIS iff P4-free, and P4 is
        // self-complementary
        Pattern::Paw | Pattern::CoPaw => Ok(match find_induced(g, Pattern::P4) {
            None => Verdict::yes(),
            Some(w) => Verdict::no(Certificate::InducedSubgraph {
                vertices: [w[0], w[1], w[2], w[3]],
                pattern: Pattern::P4,
            }),
        }),
        Pattern::P4 => Ok(Verdict::yes()),
        Pattern::Claw | Pattern::CoClaw | Pattern::P3 | Pattern::CoP3 | Pattern::K2 | Pattern::Empty2 | Pattern::K1 => {
            oracle.is_cis_bruteforce(g)
        }
    }
}

fn on_complement(v: Verdict) -> Verdict {
    match v.certificate {
        Certificate::None => v,
        c => Verdict::with(v.answer, Certificate::Complement(Box::new(c))),
    }
}

fn classifier_verdict(g: &Graph) -> Result<Verdict> {
    let c = classify_diamond_free_cis(g)?;
    Ok(Verdict::with(c.is_cis(), Certificate::Classification(c)))
}

/// Every maximal clique is strong. Meant for `K4`-free graphs, whose
/// cliques are small enough that the witness search is cheap.
fn all_maximal_cliques_strong(g: &Graph) -> Verdict {
    let rows = g.adjacency_rows();
    for clique in maximal_cliques(g) {
        if let Some(stable) = dominating_stable_set(&rows, &clique) {
            let stable = extend_to_maximal_stable(g, stable);
            return Verdict::no(Certificate::CliqueStablePair { clique, stable });
        }
    }
    Verdict::yes()
}

/// Grow a stable set to a maximal one. Started from a set dominating a
/// clique, the result still avoids that clique.
fn extend_to_maximal_stable(g: &Graph, mut stable: Vec<usize>) -> Vec<usize> {
    let mut blocked = vec![false; g.n()];
    for &s in &stable {
        blocked[s] = true;
        for &u in g.neighbors(s) {
            blocked[u] = true;
        }
    }
    for v in 0..g.n() {
        if !blocked[v] {
            stable.push(v);
            for &u in g.neighbors(v) {
                blocked[u] = true;
            }
        }
    }
    stable.sort_unstable();
    stable
}

/// Every maximal clique contains a vertex with no neighbour outside it.
fn all_maximal_cliques_simplicial(g: &Graph) -> Verdict {
    for clique in maximal_cliques(g) {
        if !clique.iter().any(|&v| g.degree(v) + 1 == clique.len()) {
            return Verdict::no(Certificate::NonSimplicialClique(clique));
        }
    }
    Verdict::yes()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn biclique(a: usize, b: usize) -> Graph {
        Graph::new(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn patterns_identify_themselves() {
        for p in Pattern::ALL {
            let g = p.graph();
            let all: Vec<usize> = (0..p.order()).collect();
            assert_eq!(Pattern::of_induced(&g, &all), Some(p), "{p}");
            assert_eq!(Pattern::of_induced(&g.complement(), &all), Some(p.complement()), "{p}");
            assert_eq!(p.complement().complement(), p);
            assert_eq!(p.name().parse::<Pattern>().unwrap(), p);
        }
    }

    #[test]
    fn four_vertex_patterns_are_pairwise_non_isomorphic() {
        // 11 patterns, 11 distinct (edge count, degree sequence) keys, and
        // every labelled 4-vertex graph lands on one of them
        let mut seen = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::new(4, edges).unwrap();
            seen.insert(Pattern::of_induced(&g, &[0, 1, 2, 3]).unwrap());
        }
        assert_eq!(seen.len(), 11);
        assert!(Pattern::FOUR_VERTEX.iter().all(|p| seen.contains(p)));
    }

    #[test]
    fn induced_scans() {
        assert!(contains_induced_4(&cycle(4), Pattern::C4).answer);
        let tree = Graph::new(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)]).unwrap();
        assert!(!contains_induced_4(&tree, Pattern::K4).answer);
        let v = contains_induced_4(&path(5), Pattern::P4);
        assert!(v.answer);
        assert!(v.verify(&path(5)));
        assert!(contains_induced_4(&tree, Pattern::Claw).answer);
        assert!(!contains_induced_4(&path(5), Pattern::Claw).answer);
        assert!(contains_induced_4(&Graph::empty(4), Pattern::Empty4).answer);
    }

    #[test]
    fn cographs() {
        assert!(is_cograph(&biclique(3, 4)));
        assert!(!is_cograph(&path(4)));
        assert!(!is_cograph(&cycle(5)));
        assert!(is_cograph(&cycle(4)));
        assert!(is_cograph(&Graph::empty(0)));
    }

    #[test]
    fn dispatch_examples() {
        let o = Oracle::default();
        assert!(cis_for_f_free(&biclique(3, 3), Pattern::Paw, &o).unwrap().answer);
        let star = Graph::new(5, (1..5).map(|i| (0, i))).unwrap();
        assert!(cis_for_f_free(&star, Pattern::C4, &o).unwrap().answer);
        let v = cis_for_f_free(&cycle(5), Pattern::K4, &o).unwrap();
        assert!(!v.answer);
        assert!(matches!(v.certificate, Certificate::CliqueStablePair { .. }));
        assert!(v.verify(&cycle(5)));
    }

    #[test]
    fn co_pattern_certificates_refer_to_the_complement() {
        let o = Oracle::default();
        // complement of C5 is C5: K4-free and empty4-free
        let v = cis_for_f_free(&cycle(5), Pattern::Empty4, &o).unwrap();
        assert!(!v.answer);
        assert!(matches!(v.certificate, Certificate::Complement(_)));
        assert!(v.verify(&cycle(5)));
    }

    #[test]
    fn pattern_must_be_absent() {
        let err = cis_for_f_free(&cycle(4), Pattern::C4, &Oracle::default()).unwrap_err();
        assert!(matches!(
            err,
            Error::NotFFree {
                pattern: Pattern::C4,
                ..
            }
        ));
    }
}
