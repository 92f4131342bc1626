//! Yes/no answers bundled with witnesses that can be re-checked against the
//! input graph without trusting the routine that produced them.

use std::fmt;

use crate::cis::Classification;
use crate::edge_simplicial::{degree_greedy_stable_set, simplicial_vertices};
use crate::ffree::Pattern;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub answer: bool,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn yes() -> Self {
        Self {
            answer: true,
            certificate: Certificate::None,
        }
    }

    pub fn no(certificate: Certificate) -> Self {
        Self {
            answer: false,
            certificate,
        }
    }

    pub fn with(answer: bool, certificate: Certificate) -> Self {
        Self { answer, certificate }
    }

    /// Re-check the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        self.certificate.verify(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    None,
    /// A stable set outside `clique` dominating it, so `clique` is not strong.
    StableSet {
        stable: Vec<usize>,
        clique: Vec<usize>,
    },
    /// An edge contained in no simplicial clique.
    Edge {
        u: usize,
        v: usize,
    },
    /// Four vertices inducing `pattern`.
    InducedSubgraph {
        vertices: [usize; 4],
        pattern: Pattern,
    },
    Classification(Classification),
    /// A maximal clique and a maximal stable set that do not meet.
    CliqueStablePair {
        clique: Vec<usize>,
        stable: Vec<usize>,
    },
    /// The degree-greedy stable set's closed neighbourhoods would need more
    /// edges than the graph has.
    GuardExceeded {
        clique_edges: u64,
        edges: usize,
    },
    /// `u` and `v` are non-adjacent neighbours of the stable-set member `via`.
    SpuriousPair {
        u: usize,
        v: usize,
        via: usize,
    },
    /// `u` and `v` are common neighbours of two stable-set members.
    DuplicatePair {
        u: usize,
        v: usize,
        via: [usize; 2],
    },
    /// An induced path `a-b-c-d` that no vertex settles.
    UnsettledP4 {
        path: [usize; 4],
    },
    Triangle([usize; 3]),
    LowDegree {
        vertex: usize,
        degree: usize,
    },
    TooFewVertices {
        n: usize,
    },
    /// A maximal clique each of whose vertices has a neighbour outside it.
    NonSimplicialClique(Vec<usize>),
    /// A certificate about the complement graph.
    Complement(Box<Certificate>),
}

impl Certificate {
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        let in_range = |set: &[usize]| set.iter().all(|&v| v < n);
        match self {
            Certificate::None => true,
            Certificate::StableSet { stable, clique } => {
                in_range(stable)
                    && in_range(clique)
                    && g.is_stable(stable)
                    && g.is_clique(clique)
                    && stable.iter().all(|s| !clique.contains(s))
                    && g.dominates(stable, clique)
            }
            Certificate::Edge { u, v } => {
                *u < n && *v < n && g.has_edge(*u, *v) && {
                    let simplicial = simplicial_vertices(g);
                    !simplicial
                        .iter()
                        .any(|&w| (w == *u || g.has_edge(w, *u)) && (w == *v || g.has_edge(w, *v)))
                }
            }
            Certificate::InducedSubgraph { vertices, pattern } => {
                in_range(vertices) && distinct(vertices) && Pattern::of_induced(g, vertices) == Some(*pattern)
            }
            Certificate::Classification(c) => c.verify(g),
            Certificate::CliqueStablePair { clique, stable } => {
                in_range(clique)
                    && in_range(stable)
                    && is_maximal_clique(g, clique)
                    && is_maximal_stable(g, stable)
                    && clique.iter().all(|c| !stable.contains(c))
            }
            Certificate::GuardExceeded { clique_edges, edges } => {
                let s = degree_greedy_stable_set(g);
                let total: u64 = s.members.iter().map(|&v| pairs(g.degree(v) + 1)).sum();
                *edges == g.m() && total == *clique_edges && total > *edges as u64
            }
            Certificate::SpuriousPair { u, v, via } => {
                let s = degree_greedy_stable_set(g);
                s.contains(*via) && g.has_edge(*via, *u) && g.has_edge(*via, *v) && u != v && !g.has_edge(*u, *v)
            }
            Certificate::DuplicatePair { u, v, via } => {
                let s = degree_greedy_stable_set(g);
                u != v
                    && via[0] != via[1]
                    && via
                        .iter()
                        .all(|&w| s.contains(w) && g.has_edge(w, *u) && g.has_edge(w, *v))
            }
            Certificate::UnsettledP4 { path: [a, b, c, d] } => {
                in_range(&[*a, *b, *c, *d])
                    && Pattern::of_induced(g, &[*a, *b, *c, *d]) == Some(Pattern::P4)
                    && g.has_edge(*a, *b)
                    && g.has_edge(*b, *c)
                    && g.has_edge(*c, *d)
                    && !(0..n)
                        .any(|x| g.has_edge(x, *b) && g.has_edge(x, *c) && !g.has_edge(x, *a) && !g.has_edge(x, *d))
            }
            Certificate::Triangle(t) => in_range(t) && distinct(t) && g.is_clique(t),
            Certificate::LowDegree { vertex, degree } => *vertex < n && g.degree(*vertex) == *degree,
            Certificate::TooFewVertices { n: claimed } => *claimed == n,
            Certificate::NonSimplicialClique(clique) => {
                in_range(clique)
                    && is_maximal_clique(g, clique)
                    && clique
                        .iter()
                        .all(|&c| g.neighbors(c).iter().any(|u| !clique.contains(u)))
            }
            Certificate::Complement(inner) => inner.verify(&g.complement()),
        }
    }
}

impl Certificate {
    /// The same certificate with every vertex `v` replaced by `map[v]`,
    /// e.g. to lift a certificate about an induced subgraph to the host.
    pub fn relabel(&self, map: &[usize]) -> Certificate {
        let set = |s: &[usize]| s.iter().map(|&v| map[v]).collect::<Vec<_>>();
        let four = |q: &[usize; 4]| q.map(|v| map[v]);
        match self {
            Certificate::None | Certificate::GuardExceeded { .. } | Certificate::TooFewVertices { .. } => self.clone(),
            Certificate::StableSet { stable, clique } => Certificate::StableSet {
                stable: set(stable),
                clique: set(clique),
            },
            Certificate::Edge { u, v } => Certificate::Edge { u: map[*u], v: map[*v] },
            Certificate::InducedSubgraph { vertices, pattern } => Certificate::InducedSubgraph {
                vertices: four(vertices),
                pattern: *pattern,
            },
            Certificate::Classification(c) => {
                let mut c = c.clone();
                for comp in &mut c.components {
                    comp.vertices = set(&comp.vertices);
                }
                Certificate::Classification(c)
            }
            Certificate::CliqueStablePair { clique, stable } => Certificate::CliqueStablePair {
                clique: set(clique),
                stable: set(stable),
            },
            Certificate::SpuriousPair { u, v, via } => Certificate::SpuriousPair {
                u: map[*u],
                v: map[*v],
                via: map[*via],
            },
            Certificate::DuplicatePair { u, v, via } => Certificate::DuplicatePair {
                u: map[*u],
                v: map[*v],
                via: via.map(|w| map[w]),
            },
            Certificate::UnsettledP4 { path } => Certificate::UnsettledP4 { path: four(path) },
            Certificate::Triangle(t) => Certificate::Triangle(t.map(|v| map[v])),
            Certificate::LowDegree { vertex, degree } => Certificate::LowDegree {
                vertex: map[*vertex],
                degree: *degree,
            },
            Certificate::NonSimplicialClique(c) => Certificate::NonSimplicialClique(set(c)),
            Certificate::Complement(inner) => Certificate::Complement(Box::new(inner.relabel(map))),
        }
    }
}

pub(crate) fn pairs(k: usize) -> u64 {
    let k = k as u64;
    k * k.saturating_sub(1) / 2
}

fn distinct(set: &[usize]) -> bool {
    set.iter().enumerate().all(|(i, v)| !set[i + 1..].contains(v))
}

pub(crate) fn is_maximal_clique(g: &Graph, set: &[usize]) -> bool {
    distinct(set) && g.is_clique(set) && !(0..g.n()).any(|x| !set.contains(&x) && set.iter().all(|&c| g.has_edge(c, x)))
}

pub(crate) fn is_maximal_stable(g: &Graph, set: &[usize]) -> bool {
    distinct(set) && g.is_stable(set) && (0..g.n()).all(|x| set.contains(&x) || set.iter().any(|&s| g.has_edge(s, x)))
}

pub(crate) fn join(set: &[usize]) -> String {
    set.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::None => write!(f, "none"),
            Certificate::StableSet { stable, clique } => write!(
                f,
                "stable set {{{}}} dominates clique {{{}}}",
                join(stable),
                join(clique)
            ),
            Certificate::Edge { u, v } => write!(f, "edge {u}-{v} lies in no simplicial clique"),
            Certificate::InducedSubgraph { vertices, pattern } => {
                write!(f, "vertices {{{}}} induce {pattern}", join(vertices))
            }
            Certificate::Classification(c) => write!(f, "{c}"),
            Certificate::CliqueStablePair { clique, stable } => write!(
                f,
                "maximal clique {{{}}} misses maximal stable set {{{}}}",
                join(clique),
                join(stable)
            ),
            Certificate::GuardExceeded { clique_edges, edges } => {
                write!(f, "guard clique_edges={clique_edges} edges={edges}")
            }
            Certificate::SpuriousPair { u, v, via } => {
                write!(f, "pair {u}-{v} is a non-edge inside N({via})")
            }
            Certificate::DuplicatePair { u, v, via } => {
                write!(f, "pair {u}-{v} lies in both N({}) and N({})", via[0], via[1])
            }
            Certificate::UnsettledP4 { path } => write!(f, "induced P4 {} is unsettled", join(path)),
            Certificate::Triangle(t) => write!(f, "triangle {{{}}}", join(t)),
            Certificate::LowDegree { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree}")
            }
            Certificate::TooFewVertices { n } => write!(f, "only {n} vertices"),
            Certificate::NonSimplicialClique(c) => {
                write!(f, "maximal clique {{{}}} is not simplicial", join(c))
            }
            Certificate::Complement(inner) => write!(f, "in the complement: {inner}"),
        }
    }
}
