//! Linear-time recognition of edge simplicial diamond-free graphs.
//!
//! A graph is edge simplicial when every edge lies in some simplicial clique
//! (the closed neighbourhood of a simplicial vertex). On diamond-free graphs
//! this is the same as every maximal clique being simplicial.
//!
//! The test takes a degree-greedy stable set `S` and compares two
//! multigraphs on `V \ S`: the graph `G - S` itself, and the companion
//! multigraph `G_S` holding one copy of `xy` for every member of `S` with
//! `x, y` in its neighbourhood. For diamond-free input they coincide exactly
//! when the graph is edge simplicial. Every step is a linear scan or a
//! bucket pass; the only super-linear piece, building `G_S`, runs after a
//! counting guard has bounded its size by `|E|`. Both multigraphs are built
//! with their lists already in the degree order, so comparing them is a
//! plain element-wise scan.

use crate::diamond::require_diamond_free;
use crate::error::{Error, Result};
use crate::graph::{Graph, Multigraph, VertexOrder};
use crate::verdict::{pairs, Certificate, Verdict};

/// How the greedy pass treated a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    Selected,
    /// Skipped because this earlier-selected neighbour was already in the set.
    MarkedBy(usize),
}

/// A stable set built greedily along a degree-sorted order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStableSet {
    /// Members in selection order.
    pub members: Vec<usize>,
    pub order: VertexOrder,
    pub trace: Vec<Selection>,
}

impl GreedyStableSet {
    pub fn contains(&self, v: usize) -> bool {
        self.trace[v] == Selection::Selected
    }

    /// Members ascending by vertex index.
    pub fn sorted_members(&self) -> Vec<usize> {
        let mut m = self.members.clone();
        m.sort_unstable();
        m
    }
}

/// Scan vertices by non-decreasing degree (ties by index) and take each one
/// whose earlier neighbours were all skipped.
pub fn degree_greedy_stable_set(g: &Graph) -> GreedyStableSet {
    greedy_along(g, VertexOrder::by_degree(g))
}

fn greedy_along(g: &Graph, order: VertexOrder) -> GreedyStableSet {
    let n = g.n();
    let mut trace: Vec<Option<Selection>> = vec![None; n];
    let mut members = Vec::new();
    for &v in order.sequence() {
        if trace[v].is_some() {
            continue;
        }
        trace[v] = Some(Selection::Selected);
        members.push(v);
        for &u in g.neighbors(v) {
            if trace[u].is_none() {
                trace[u] = Some(Selection::MarkedBy(v));
            }
        }
    }
    GreedyStableSet {
        members,
        order,
        trace: trace.into_iter().map(|t| t.expect("every vertex is visited")).collect(),
    }
}

/// `G_S` relabelled onto `V \ S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionGraph {
    pub multigraph: Multigraph,
    /// Original vertex of each companion vertex, ascending.
    pub vertices: Vec<usize>,
}

/// The companion multigraph of a stable set: vertex set `V \ S`, one edge
/// `xy` for each `v` in `S` and each pair `x != y` of neighbours of `v`.
pub fn companion_multigraph(g: &Graph, stable: &[usize]) -> Result<CompanionGraph> {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &v in stable {
        if v >= n {
            return Err(Error::IndexOutOfRange { vertex: v, n });
        }
        in_s[v] = true;
    }
    if let Some((u, v)) = g.find_edge_within(stable) {
        return Err(Error::NotStable { u, v });
    }
    let vertices: Vec<usize> = (0..n).filter(|&v| !in_s[v]).collect();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in vertices.iter().enumerate() {
        position[v] = i;
    }
    let mut seen = vec![false; n];
    let mut edges = Vec::new();
    for &s in stable {
        if std::mem::replace(&mut seen[s], true) {
            continue;
        }
        let nbrs = g.neighbors(s);
        for (i, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[i + 1..] {
                edges.push((position[x], position[y]));
            }
        }
    }
    let multigraph = Multigraph::new(vertices.len(), edges)?;
    Ok(CompanionGraph { multigraph, vertices })
}

/// Vertices whose neighbourhood is a clique, by direct pairwise check.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.is_clique(g.neighbors(v))).collect()
}

/// Edge simplicial test for a graph the caller knows to be diamond-free.
///
/// The answer on graphs containing a diamond is unspecified; use
/// [`is_edge_simplicial`] when the input is untrusted.
pub fn is_edge_simplicial_linear(g: &Graph) -> Verdict {
    const FREE: u8 = 0;
    const IN_S: u8 = 1;
    const BLOCKED: u8 = 2;
    let n = g.n();
    let m = g.m();
    assert!(
        u32::try_from(n.max(2 * m)).is_ok(),
        "graph too large for 32-bit indices"
    );

    // The same order and stable set as `degree_greedy_stable_set`, kept in
    // compact arrays.
    let sequence = degree_sequence(g);
    let mut state = vec![FREE; n];
    let mut clique_edges = 0u64;
    for &v in &sequence {
        let v = v as usize;
        if state[v] != FREE {
            continue;
        }
        state[v] = IN_S;
        clique_edges += pairs(g.degree(v) + 1);
        for &u in g.neighbors(v) {
            if state[u] == FREE {
                state[u] = BLOCKED;
            }
        }
    }

    // The closed neighbourhoods of S are edge-disjoint cliques in an edge
    // simplicial diamond-free graph, so their edges cannot outnumber E.
    if clique_edges > m as u64 {
        return Verdict::no(Certificate::GuardExceeded { clique_edges, edges: m });
    }

    // `offsets[w + 1]` first holds the length of w's G_S list; the lengths
    // of G - S are compared against it before it becomes a prefix sum.
    let mut offsets = vec![0u32; n + 1];
    for s in (0..n).filter(|&s| state[s] == IN_S) {
        let d = g.degree(s) as u32;
        for &w in g.neighbors(s) {
            offsets[w + 1] += d - 1;
        }
    }
    for w in 0..n {
        let comp_len = offsets[w + 1];
        let minus_len = if state[w] == IN_S {
            0
        } else {
            g.neighbors(w).iter().filter(|&&u| state[u] != IN_S).count() as u32
        };
        if minus_len != comp_len {
            return Verdict::no(length_mismatch(g, &state_to_set(&state, IN_S), w));
        }
        offsets[w + 1] += offsets[w];
    }

    // Both lists of every vertex, filled in order by a single scan: `x`
    // joins the G - S list of each neighbour outside S, and the G_S list of
    // every other neighbour of each neighbour in S. The lists share offsets,
    // so they are stored interleaved as (G_S, G - S) pairs.
    let mut lists = vec![[0u32; 2]; offsets[n] as usize];
    let mut cursor: Vec<[u32; 2]> = offsets[..n].iter().map(|&o| [o, o]).collect();
    for &x in &sequence {
        if state[x as usize] == IN_S {
            continue;
        }
        for &u in g.neighbors(x as usize) {
            if state[u] == IN_S {
                for &w in g.neighbors(u) {
                    if w != x as usize {
                        lists[cursor[w][0] as usize][0] = x;
                        cursor[w][0] += 1;
                    }
                }
            } else {
                lists[cursor[u][1] as usize][1] = x;
                cursor[u][1] += 1;
            }
        }
    }

    for w in 0..n {
        let pairs = &lists[offsets[w] as usize..offsets[w + 1] as usize];
        if pairs.iter().any(|p| p[0] != p[1]) {
            let side = |i: usize| pairs.iter().map(|p| p[i] as usize).collect::<Vec<_>>();
            return Verdict::no(mismatch_certificate(
                g,
                &state_to_set(&state, IN_S),
                w,
                &side(0),
                &side(1),
                &VertexOrder::by_degree(g),
            ));
        }
    }
    Verdict::yes()
}

/// Vertices by non-decreasing degree, ties by index.
fn degree_sequence(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let max = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
    let mut start = vec![0u32; max + 2];
    for v in 0..n {
        start[g.degree(v) + 1] += 1;
    }
    for d in 1..start.len() {
        start[d] += start[d - 1];
    }
    let mut sequence = vec![0u32; n];
    for v in 0..n {
        let slot = &mut start[g.degree(v)];
        sequence[*slot as usize] = v as u32;
        *slot += 1;
    }
    sequence
}

fn state_to_set(state: &[u8], member: u8) -> Vec<bool> {
    state.iter().map(|&t| t == member).collect()
}

/// Certificate for a vertex whose two lists differ in length.
fn length_mismatch(g: &Graph, in_s: &[bool], w: usize) -> Certificate {
    let order = VertexOrder::by_degree(g);
    let mut minus: Vec<usize> = g.neighbors(w).iter().copied().filter(|&u| !in_s[u]).collect();
    minus.sort_unstable_by_key(|&x| order.rank(x));
    let mut comp: Vec<usize> = g
        .neighbors(w)
        .iter()
        .filter(|&&s| in_s[s])
        .flat_map(|&s| g.neighbors(s).iter().copied().filter(|&x| x != w))
        .collect();
    comp.sort_unstable_by_key(|&x| order.rank(x));
    mismatch_certificate(g, in_s, w, &comp, &minus, &order)
}

/// Edge simplicial test that first rejects graphs containing a diamond.
pub fn is_edge_simplicial(g: &Graph) -> Result<Verdict> {
    require_diamond_free(g)?;
    Ok(is_edge_simplicial_linear(g))
}

/// Explain the first difference between the `G_S` list and the `G - S` list
/// of `w`, both sorted by `order`.
fn mismatch_certificate(
    g: &Graph,
    in_s: &[bool],
    w: usize,
    companion: &[usize],
    minus: &[usize],
    order: &VertexOrder,
) -> Certificate {
    let (mut i, mut j) = (0, 0);
    loop {
        let a = companion.get(i).copied();
        let b = minus.get(j).copied();
        match (a, b) {
            (Some(x), Some(y)) if x == y => {
                if companion.get(i + 1) == Some(&x) {
                    return duplicate_or_spurious(g, in_s, w, x);
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if order.rank(x) < order.rank(y) => {
                return duplicate_or_spurious(g, in_s, w, x);
            }
            (Some(x), None) => return duplicate_or_spurious(g, in_s, w, x),
            (_, Some(y)) => {
                return Certificate::Edge {
                    u: w.min(y),
                    v: w.max(y),
                }
            }
            (None, None) => unreachable!("lists differ"),
        }
    }
}

fn duplicate_or_spurious(g: &Graph, in_s: &[bool], w: usize, x: usize) -> Certificate {
    let (u, v) = (w.min(x), w.max(x));
    let vias: Vec<usize> = g
        .neighbors(w)
        .iter()
        .copied()
        .filter(|&s| in_s[s] && g.has_edge(s, x))
        .take(2)
        .collect();
    if !g.has_edge(w, x) {
        Certificate::SpuriousPair { u, v, via: vias[0] }
    } else {
        Certificate::DuplicatePair {
            u,
            v,
            via: [vias[0], vias[1]],
        }
    }
}
