//! Named graph families and seeded random generators.
//!
//! Every random generator is a deterministic function of its parameters and
//! seed (ChaCha8). [`generate`] re-checks each output against its family's
//! defining property before returning it.

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cis::is_rook_graph;
use crate::diamond::is_diamond_free;
use crate::edge_simplicial::is_edge_simplicial_linear;
use crate::error::{Error, Result};
use crate::graph::{complete_bipartite_signature, Graph};
use crate::io::{Format, GraphDocument};
use crate::reductions::validate_class_g;

pub fn biclique(a: usize, b: usize) -> Graph {
    Graph::from_predicate(a + b, |u, v| (u < a) != (v < a))
}

/// `L(K_{n,n})`: square `(i, j)` is vertex `i*n + j`, adjacent to the other
/// squares of its row and column.
pub fn rook(n: usize) -> Graph {
    Graph::from_predicate(n * n, |u, v| u / n == v / n || u % n == v % n)
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

/// Outer 5-cycle `0..5`, spokes `i - (i+5)`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    Graph::new(
        10,
        (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]),
    )
    .expect("petersen edges are valid")
}

/// The Mycielskian of `C5`: cycle `0..5`, shadow `5 + i` adjacent to the
/// cycle neighbours of `i`, and vertex 10 adjacent to every shadow.
/// Triangle-free, 4-chromatic, minimum degree 3.
pub fn grotzsch() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, (i + 1) % 5));
        edges.push((5 + i, (i + 4) % 5));
        edges.push((10, 5 + i));
    }
    Graph::new(11, edges).expect("grotzsch edges are valid")
}

/// Triangle-free graph: pairs are visited in a seeded random order and each
/// is kept with probability `p` unless it would close a triangle.
pub fn random_triangle_free(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadParams(format!("edge probability {p} is not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    let mut edges = Vec::new();
    for (u, v) in shuffled_pairs(n, &mut rng) {
        if rng.gen_bool(p) && rows[u].is_disjoint(&rows[v]) {
            rows[u].insert(v);
            rows[v].insert(u);
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// Diamond-free graph with up to `m` edges: pairs are visited in a seeded
/// random order and kept unless they would complete an induced diamond.
/// Stops early when no pair can be added.
pub fn random_diamond_free(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(Error::BadParams(format!("{m} edges do not fit on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    let mut edges = Vec::new();
    for (u, v) in shuffled_pairs(n, &mut rng) {
        if edges.len() == m {
            break;
        }
        rows[u].insert(v);
        rows[v].insert(u);
        if creates_diamond(&rows, u, v) {
            rows[u].set(v, false);
            rows[v].set(u, false);
        } else {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

fn shuffled_pairs(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    pairs
}

/// Whether some induced diamond uses the edge `uv`. Every other vertex of
/// such a diamond is adjacent to `u` or `v`.
fn creates_diamond(rows: &[FixedBitSet], u: usize, v: usize) -> bool {
    let mut around = rows[u].clone();
    around.union_with(&rows[v]);
    around.set(u, false);
    around.set(v, false);
    let near: Vec<usize> = around.ones().collect();
    for (i, &x) in near.iter().enumerate() {
        for &y in &near[i + 1..] {
            let q = [u, v, x, y];
            let mut edges = 0;
            for a in 0..4 {
                for b in a + 1..4 {
                    edges += rows[q[a]].contains(q[b]) as usize;
                }
            }
            if edges == 5 {
                return true;
            }
        }
    }
    false
}

/// Block graph of `k` cliques with sizes drawn from
/// `min_size..=max_size`. Each new clique shares one vertex with the graph
/// built so far, and a vertex is only shared while its clique keeps another
/// unshared vertex, so every clique retains a simplicial vertex.
pub fn random_clique_simplicial(k: usize, min_size: usize, max_size: usize, seed: u64) -> Result<Graph> {
    if k == 0 || min_size < 2 || min_size > max_size {
        return Err(Error::BadParams(format!(
            "need k >= 1 and 2 <= min <= max, got k={k} min={min_size} max={max_size}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    // per vertex: the clique it is still free in, if any
    let mut free_in: Vec<Option<usize>> = Vec::new();
    let mut free_count: Vec<usize> = Vec::new();
    for c in 0..k {
        let size = rng.gen_range(min_size..=max_size);
        let mut members = Vec::with_capacity(size);
        if c > 0 {
            let attach = loop {
                let v = rng.gen_range(0..free_in.len());
                match free_in[v] {
                    Some(q) if free_count[q] < 2 => continue,
                    Some(q) => {
                        free_count[q] -= 1;
                        free_in[v] = None;
                        break v;
                    }
                    None => break v,
                }
            };
            members.push(attach);
        }
        while members.len() < size {
            members.push(free_in.len());
            free_in.push(Some(c));
        }
        free_count.push(size - usize::from(c > 0));
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::new(free_in.len(), edges)
}

/// A clique simplicial graph with `n + m` close to `target`, built from
/// cliques of 2 to 6 vertices. Used for scaling measurements.
pub fn clique_simplicial_of_size(target: usize, seed: u64) -> Graph {
    // a clique of s vertices adds s - 1 vertices and s(s-1)/2 edges; sizes
    // average 4, so about 9 per clique
    let k = (target / 9).max(1);
    random_clique_simplicial(k, 2, 6, seed).expect("valid parameters")
}

/// `K_{4,b}` with `n + m` close to `target`.
pub fn biclique_of_size(target: usize) -> Graph {
    biclique(4, (target.saturating_sub(4) / 5).max(4))
}

/// `L(K_{k,k})` with `n + m = k^3` close to `target`.
pub fn rook_of_size(target: usize) -> Graph {
    rook(((target as f64).cbrt().round() as usize).max(3))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Biclique {
        m: usize,
        n: usize,
    },
    Rook {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Path {
        n: usize,
    },
    Petersen,
    Grotzsch,
    RandomTriangleFree {
        n: usize,
        p: f64,
        seed: u64,
    },
    RandomCliqueSimplicial {
        k: usize,
        min: usize,
        max: usize,
        seed: u64,
    },
    RandomDiamondFree {
        n: usize,
        m: usize,
        seed: u64,
    },
}

impl Family {
    pub const NAMES: [&'static str; 9] = [
        "biclique",
        "rook",
        "cycle",
        "path",
        "petersen",
        "grotzsch",
        "random_triangle_free",
        "random_clique_simplicial",
        "random_diamond_free",
    ];

    /// Parameter names in positional order.
    pub fn parameters(name: &str) -> Option<&'static [&'static str]> {
        Some(match name {
            "biclique" => &["m", "n"],
            "rook" | "cycle" | "path" => &["n"],
            "petersen" | "grotzsch" => &[],
            "random_triangle_free" => &["n", "p", "seed"],
            "random_clique_simplicial" => &["k", "min", "max", "seed"],
            "random_diamond_free" => &["n", "m", "seed"],
            _ => return None,
        })
    }

    /// Build from a family name and `value` or `key=value` arguments.
    pub fn from_args(name: &str, args: &[String]) -> Result<Self> {
        let name = name.replace('-', "_").to_ascii_lowercase();
        let keys = Family::parameters(&name).ok_or_else(|| {
            Error::BadParams(format!(
                "unknown family '{name}' (expected one of {})",
                Family::NAMES.join(", ")
            ))
        })?;
        let mut values: Vec<Option<&str>> = vec![None; keys.len()];
        let mut next = 0;
        for arg in args {
            let (slot, value) = match arg.split_once('=') {
                Some((k, v)) => {
                    let slot = keys
                        .iter()
                        .position(|key| *key == k)
                        .ok_or_else(|| Error::BadParams(format!("{name} has no parameter '{k}'")))?;
                    (slot, v)
                }
                None => {
                    while next < keys.len() && values[next].is_some() {
                        next += 1;
                    }
                    if next == keys.len() {
                        return Err(Error::BadParams(format!("too many parameters for {name}")));
                    }
                    (next, arg.as_str())
                }
            };
            values[slot] = Some(value);
        }
        let get = |i: usize| -> Result<&str> {
            values[i].ok_or_else(|| Error::BadParams(format!("{name} needs parameter '{}'", keys[i])))
        };
        let int = |i: usize| -> Result<usize> {
            get(i)?
                .parse()
                .map_err(|_| Error::BadParams(format!("parameter '{}' must be a non-negative integer", keys[i])))
        };
        let seed = |i: usize| -> Result<u64> { Ok(int(i)? as u64) };
        Ok(match name.as_str() {
            "biclique" => Family::Biclique { m: int(0)?, n: int(1)? },
            "rook" => Family::Rook { n: int(0)? },
            "cycle" => Family::Cycle { n: int(0)? },
            "path" => Family::Path { n: int(0)? },
            "petersen" => Family::Petersen,
            "grotzsch" => Family::Grotzsch,
            "random_triangle_free" => Family::RandomTriangleFree {
                n: int(0)?,
                p: get(1)?
                    .parse()
                    .map_err(|_| Error::BadParams("parameter 'p' must be a number".into()))?,
                seed: seed(2)?,
            },
            "random_clique_simplicial" => Family::RandomCliqueSimplicial {
                k: int(0)?,
                min: int(1)?,
                max: int(2)?,
                seed: seed(3)?,
            },
            "random_diamond_free" => Family::RandomDiamondFree {
                n: int(0)?,
                m: int(1)?,
                seed: seed(2)?,
            },
            _ => unreachable!(),
        })
    }

    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Biclique { m, n } => {
                if m == 0 || n == 0 {
                    return Err(Error::BadParams("biclique sides must be non-empty".into()));
                }
                Ok(biclique(m, n))
            }
            Family::Rook { n } => {
                if n == 0 {
                    return Err(Error::BadParams("rook needs n >= 1".into()));
                }
                Ok(rook(n))
            }
            Family::Cycle { n } => {
                if n < 3 {
                    return Err(Error::BadParams("cycle needs n >= 3".into()));
                }
                Ok(cycle(n))
            }
            Family::Path { n } => Ok(path(n)),
            Family::Petersen => Ok(petersen()),
            Family::Grotzsch => Ok(grotzsch()),
            Family::RandomTriangleFree { n, p, seed } => random_triangle_free(n, p, seed),
            Family::RandomCliqueSimplicial { k, min, max, seed } => random_clique_simplicial(k, min, max, seed),
            Family::RandomDiamondFree { n, m, seed } => random_diamond_free(n, m, seed),
        }
    }

    /// Whether `g` has the property this family promises.
    pub fn check(&self, g: &Graph) -> bool {
        match *self {
            Family::Biclique { m, n } => {
                g.n() == m + n
                    && complete_bipartite_signature(g)
                        .ok()
                        .flatten()
                        .is_some_and(|(a, b)| (a, b) == (m.min(n), m.max(n)))
            }
            Family::Rook { n } if n >= 3 => is_rook_graph(g) == Ok(Some(n)),
            Family::Rook { n } => g.n() == n * n && g.edges().all(|(u, v)| u / n == v / n || u % n == v % n),
            Family::Cycle { n } => g.n() == n && g.m() == n && (0..n).all(|v| g.degree(v) == 2),
            Family::Path { n } => g.n() == n && g.m() == n.saturating_sub(1),
            Family::Petersen => validate_class_g(g).answer && g.n() == 10 && g.m() == 15,
            Family::Grotzsch => validate_class_g(g).answer && g.n() == 11 && g.m() == 20,
            Family::RandomTriangleFree { .. } => g
                .edges()
                .all(|(u, v)| !g.neighbors(u).iter().any(|&w| g.has_edge(v, w))),
            Family::RandomCliqueSimplicial { .. } => is_diamond_free(g).answer && is_edge_simplicial_linear(g).answer,
            Family::RandomDiamondFree { .. } => is_diamond_free(g).answer,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Biclique { .. } => "biclique",
            Family::Rook { .. } => "rook",
            Family::Cycle { .. } => "cycle",
            Family::Path { .. } => "path",
            Family::Petersen => "petersen",
            Family::Grotzsch => "grotzsch",
            Family::RandomTriangleFree { .. } => "random_triangle_free",
            Family::RandomCliqueSimplicial { .. } => "random_clique_simplicial",
            Family::RandomDiamondFree { .. } => "random_diamond_free",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())?;
        match self {
            Family::Biclique { m, n } => write!(f, " m={m} n={n}"),
            Family::Rook { n } | Family::Cycle { n } | Family::Path { n } => write!(f, " n={n}"),
            Family::Petersen | Family::Grotzsch => Ok(()),
            Family::RandomTriangleFree { n, p, seed } => write!(f, " n={n} p={p} seed={seed}"),
            Family::RandomCliqueSimplicial { k, min, max, seed } => {
                write!(f, " k={k} min={min} max={max} seed={seed}")
            }
            Family::RandomDiamondFree { n, m, seed } => write!(f, " n={n} m={m} seed={seed}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `name` followed by whitespace-separated parameters.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split_whitespace();
        let name = parts.next().unwrap_or("");
        let args: Vec<String> = parts.map(String::from).collect();
        Family::from_args(name, &args)
    }
}

/// Build a family member and confirm it has the advertised property.
pub fn generate(family: &Family) -> Result<GraphDocument> {
    let g = family.build()?;
    if !family.check(&g) {
        return Err(Error::BadParams(format!(
            "generated graph for {family} failed its family check"
        )));
    }
    Ok(GraphDocument::new(g, Format::EdgeList))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_families() {
        let r = generate(&Family::Rook { n: 3 }).unwrap().graph;
        assert_eq!(r.n(), 9);
        assert!((0..9).all(|v| r.degree(v) == 4));
        assert_eq!(complete_bipartite_signature(&cycle(4)).unwrap(), Some((2, 2)));
        assert_eq!(biclique(2, 2).m(), 4);
        assert!(validate_class_g(&grotzsch()).answer);
        assert_eq!(grotzsch().m(), 20);
    }

    #[test]
    fn family_parsing() {
        assert_eq!("rook 4".parse::<Family>().unwrap(), Family::Rook { n: 4 });
        assert_eq!(
            "biclique n=3 m=2".parse::<Family>().unwrap(),
            Family::Biclique { m: 2, n: 3 }
        );
        assert_eq!(
            "random-diamond-free 10 seed=3 12".parse::<Family>().unwrap(),
            Family::RandomDiamondFree { n: 10, m: 12, seed: 3 }
        );
        assert!(matches!("rook".parse::<Family>(), Err(Error::BadParams(_))));
        assert!(matches!("rook 3 4".parse::<Family>(), Err(Error::BadParams(_))));
        assert!(matches!("tree 3".parse::<Family>(), Err(Error::BadParams(_))));
    }

    #[test]
    fn random_generators_are_seeded() {
        for seed in 0..20 {
            let a = random_diamond_free(12, 20, seed).unwrap();
            assert_eq!(a, random_diamond_free(12, 20, seed).unwrap());
            assert!(is_diamond_free(&a).answer);
            let t = random_triangle_free(12, 0.5, seed).unwrap();
            assert!(Family::RandomTriangleFree { n: 12, p: 0.5, seed }.check(&t));
            let c = random_clique_simplicial(6, 2, 5, seed).unwrap();
            assert!(is_edge_simplicial_linear(&c).answer);
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(random_clique_simplicial(3, 1, 4, 0).is_err());
        assert!(random_clique_simplicial(3, 5, 4, 0).is_err());
        assert!(random_diamond_free(3, 4, 0).is_err());
        assert!(random_triangle_free(3, 1.5, 0).is_err());
        assert!(generate(&Family::Cycle { n: 2 }).is_err());
    }

    #[test]
    fn sized_families() {
        for target in [1000, 4000] {
            let g = clique_simplicial_of_size(target, 1);
            let size = g.n() + g.m();
            assert!(size > target / 2 && size < target * 2, "{size}");
            let b = biclique_of_size(target);
            assert!((b.n() + b.m()).abs_diff(target) < 10);
        }
    }
}
