//! Immutable simple graphs and multigraphs in compressed adjacency form,
//! vertex orders, and the handful of structural queries everything else is
//! built from.
//!
//! Vertices are the dense integers `0..n`. Neighbour lists are stored back to
//! back in one array (`targets`) and delimited by `offsets`, so a graph is two
//! allocations no matter how many vertices it has.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Read access shared by [`Graph`] and [`Multigraph`].
pub trait AdjacencyLists: Sized {
    fn vertex_count(&self) -> usize;

    fn neighbors(&self, v: usize) -> &[usize];

    /// Rebuild a value of the same kind from raw compressed lists. The caller
    /// guarantees symmetry.
    #[doc(hidden)]
    fn from_raw_parts(offsets: Vec<usize>, targets: Vec<usize>) -> Self;

    #[doc(hidden)]
    fn raw_offsets(&self) -> &[usize];

    fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    /// Every neighbour list is ascending by vertex index.
    index_sorted: bool,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse into one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lists = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        for list in &mut lists {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self::from_sorted_lists(lists))
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
            index_sorted: true,
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let lists = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Self::from_sorted_lists(lists)
    }

    pub(crate) fn from_sorted_lists(lists: Vec<Vec<usize>>) -> Self {
        let (offsets, targets) = flatten(lists);
        Self {
            offsets,
            targets,
            index_sorted: true,
        }
    }

    /// Build from a dense adjacency predicate over all pairs `u < v`.
    pub(crate) fn from_predicate(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut lists = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    lists[u].push(v);
                    lists[v].push(u);
                }
            }
        }
        Self::from_sorted_lists(lists)
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        if self.index_sorted {
            self.neighbors(a).binary_search(&b).is_ok()
        } else {
            self.neighbors(a).contains(&b)
        }
    }

    /// Edges `(u, v)` with `u < v`, grouped by `u`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// All edges in lexicographic order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<_> = self.edges().collect();
        if !self.index_sorted {
            edges.sort_unstable();
        }
        edges
    }

    pub fn is_index_sorted(&self) -> bool {
        self.index_sorted
    }

    /// Same graph with every neighbour list ascending by index.
    pub fn index_sorted(&self) -> Graph {
        if self.index_sorted {
            return self.clone();
        }
        let mut sorted =
            sort_adjacency(self, &VertexOrder::identity(self.n())).expect("identity order has the right length");
        sorted.index_sorted = true;
        sorted
    }

    pub fn complement(&self) -> Graph {
        let rows = self.adjacency_rows();
        Graph::from_predicate(self.n(), |u, v| !rows[u].contains(v))
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut position = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let lists = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self
                    .neighbors(v)
                    .iter()
                    .filter_map(|&u| (position[u] != usize::MAX).then_some(position[u]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect();
        Graph::from_sorted_lists(lists)
    }

    /// One bitset row per vertex, bit `u` of row `v` set iff `uv` is an edge.
    pub fn adjacency_rows(&self) -> Vec<FixedBitSet> {
        (0..self.n())
            .map(|v| {
                let mut row = FixedBitSet::with_capacity(self.n());
                for &u in self.neighbors(v) {
                    row.insert(u);
                }
                row
            })
            .collect()
    }

    /// First non-adjacent pair inside `set`, if any.
    pub fn find_non_edge(&self, set: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if u == v || !self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    /// First adjacent pair inside `set`, if any.
    pub fn find_edge_within(&self, set: &[usize]) -> Option<(usize, usize)> {
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    return Some((u, v));
                }
            }
        }
        None
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        self.find_non_edge(set).is_none()
    }

    pub fn is_stable(&self, set: &[usize]) -> bool {
        self.find_edge_within(set).is_none()
    }

    /// Whether every vertex of `target` has a neighbour in `by`.
    pub fn dominates(&self, by: &[usize], target: &[usize]) -> bool {
        target.iter().all(|&c| by.iter().any(|&s| self.has_edge(s, c)))
    }
}

impl AdjacencyLists for Graph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        Graph::neighbors(self, v)
    }

    fn from_raw_parts(offsets: Vec<usize>, targets: Vec<usize>) -> Self {
        let index_sorted = offsets
            .windows(2)
            .all(|w| targets[w[0]..w[1]].windows(2).all(|p| p[0] < p[1]));
        Self {
            offsets,
            targets,
            index_sorted,
        }
    }

    fn raw_offsets(&self) -> &[usize] {
        &self.offsets
    }
}

/// An undirected multigraph: a vertex may appear several times in another
/// vertex's neighbour list, once per parallel edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Multigraph {
    /// Build from an edge list, keeping every copy.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut lists = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            lists[u].push(v);
            lists[v].push(u);
        }
        let (offsets, targets) = flatten(lists);
        Ok(Self { offsets, targets })
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Edge count with multiplicity.
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.neighbors(u).iter().filter(|&&w| w == v).count()
    }

    /// Distinct vertex pairs `(u, v)`, `u < v`, with their multiplicity,
    /// in lexicographic order.
    pub fn edge_multiset(&self) -> Vec<((usize, usize), usize)> {
        let mut pairs: Vec<(usize, usize)> = (0..self.n())
            .flat_map(|u| {
                self.neighbors(u)
                    .iter()
                    .copied()
                    .filter(move |&v| u < v)
                    .map(move |v| (u, v))
            })
            .collect();
        pairs.sort_unstable();
        let mut out: Vec<((usize, usize), usize)> = Vec::new();
        for p in pairs {
            match out.last_mut() {
                Some((q, count)) if *q == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Whether some vertex pair carries two or more parallel edges.
    pub fn has_parallel_edges(&self) -> bool {
        self.edge_multiset().iter().any(|&(_, count)| count > 1)
    }
}

impl AdjacencyLists for Multigraph {
    fn vertex_count(&self) -> usize {
        self.n()
    }

    fn neighbors(&self, v: usize) -> &[usize] {
        Multigraph::neighbors(self, v)
    }

    fn from_raw_parts(offsets: Vec<usize>, targets: Vec<usize>) -> Self {
        Self { offsets, targets }
    }

    fn raw_offsets(&self) -> &[usize] {
        &self.offsets
    }
}

fn flatten(lists: Vec<Vec<usize>>) -> (Vec<usize>, Vec<usize>) {
    let mut offsets = Vec::with_capacity(lists.len() + 1);
    offsets.push(0);
    let total = lists.iter().map(Vec::len).sum();
    let mut targets = Vec::with_capacity(total);
    for list in lists {
        targets.extend(list);
        offsets.push(targets.len());
    }
    (offsets, targets)
}

/// A linear order on `0..n`: `sequence[i]` is the `i`-th vertex and
/// `rank[v]` is the position of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    sequence: Vec<usize>,
    rank: Vec<usize>,
}

impl VertexOrder {
    pub fn new(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::BadOrder { n });
            }
            rank[v] = i;
        }
        Ok(Self { sequence, rank })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            sequence: (0..n).collect(),
            rank: (0..n).collect(),
        }
    }

    /// Vertices by non-decreasing degree, ties by ascending index. Counting
    /// sort, so linear in `n + max degree`.
    pub fn by_degree<G: AdjacencyLists>(g: &G) -> Self {
        let n = g.vertex_count();
        let max = (0..n).map(|v| g.degree(v)).max().unwrap_or(0);
        let mut start = vec![0usize; max + 2];
        for v in 0..n {
            start[g.degree(v) + 1] += 1;
        }
        for d in 1..start.len() {
            start[d] += start[d - 1];
        }
        let mut sequence = vec![0; n];
        let mut rank = vec![0; n];
        for v in 0..n {
            let slot = &mut start[g.degree(v)];
            sequence[*slot] = v;
            rank[v] = *slot;
            *slot += 1;
        }
        Self { sequence, rank }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }
}

/// Reorder every neighbour list increasingly by `order`.
///
/// Vertices are scanned in `order` and each one is appended to the new list
/// of each of its neighbours. By symmetry the new list of `u` then holds
/// `N(u)` in `order`, multiplicities included. Linear in `n + m`.
pub fn sort_adjacency<G: AdjacencyLists>(g: &G, order: &VertexOrder) -> Result<G> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(Error::BadOrder { n });
    }
    let offsets = g.raw_offsets().to_vec();
    let mut cursor = offsets[..n].to_vec();
    let mut targets = vec![0; offsets[n]];
    for &v in order.sequence() {
        for &u in g.neighbors(v) {
            targets[cursor[u]] = v;
            cursor[u] += 1;
        }
    }
    Ok(G::from_raw_parts(offsets, targets))
}

/// Connected components, each ascending, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        let mut component = Vec::new();
        while let Some(v) = queue.pop_front() {
            component.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        component.sort_unstable();
        components.push(component);
    }
    components
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() <= 1 || connected_components(g).len() == 1
}

/// Part sizes `(a, b)` with `a <= b` if `g` is a complete bipartite graph
/// `K_{a,b}` with `a, b >= 1`.
///
/// Breadth-first search from vertex 0 gives the layers `X` (distance 1) and
/// `Y` (distance 2). `g` is complete bipartite iff there is no third layer,
/// no edge inside a layer, every `x` in `X` has degree `|Y| + 1` and every
/// `y` in `Y` has degree `|X|`.
pub fn complete_bipartite_signature(g: &Graph) -> Result<Option<(usize, usize)>> {
    let n = g.n();
    if n == 0 {
        return Ok(None);
    }
    let mut dist = vec![usize::MAX; n];
    dist[0] = 0;
    let mut queue = VecDeque::from([0]);
    let mut reached = 0;
    while let Some(v) = queue.pop_front() {
        reached += 1;
        for &u in g.neighbors(v) {
            if dist[u] == usize::MAX {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    if reached != n {
        return Err(Error::NotConnected);
    }
    if n == 1 {
        return Ok(None);
    }
    let x = dist.iter().filter(|&&d| d == 1).count();
    let y = dist.iter().filter(|&&d| d == 2).count();
    if 1 + x + y != n {
        return Ok(None);
    }
    for v in 0..n {
        let same_layer = g.neighbors(v).iter().any(|&u| dist[u] % 2 == dist[v] % 2);
        let expected = if dist[v] == 1 { y + 1 } else { x };
        if same_layer || g.degree(v) != expected {
            return Ok(None);
        }
    }
    let (a, b) = (x, y + 1);
    Ok(Some((a.min(b), a.max(b))))
}
