//! Gadgets tying strong cliques to 3-colourability.
//!
//! From a source graph `G` in class 𝒢 (triangle-free, at least five
//! vertices, minimum degree at least three) [`build_g_prime`] builds a
//! diamond-free graph on `V(G) × {0,1,2,3}`: every column `C_v` and the
//! level-0 row `C` are cliques, and on levels 1 to 3 each row is a copy of
//! `G`. `G` is 3-colourable exactly when a stable set dominates `C`, i.e.
//! when `C` is not strong. [`build_g_double_prime`] adds a pendant to every
//! vertex off `C`, which turns the partition and cover questions into the
//! same test.
//!
//! Vertex `(v, i)` is numbered `4v + i`; the pendant of `(v, i)`, `i >= 1`,
//! is `4n + 3v + i - 1`.

use std::fmt;

use crate::diamond::require_diamond_free;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::Oracle;
use crate::verdict::{Certificate, Verdict};

/// Whether `g` is triangle-free with at least five vertices and minimum
/// degree at least three.
pub fn validate_class_g(g: &Graph) -> Verdict {
    if g.n() < 5 {
        return Verdict::no(Certificate::TooFewVertices { n: g.n() });
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < 3) {
        return Verdict::no(Certificate::LowDegree {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let g = g.index_sorted();
    for (u, v) in g.edges() {
        if let Some(&w) = g.neighbors(u).iter().find(|&&w| g.has_edge(v, w)) {
            let mut t = [u, v, w];
            t.sort_unstable();
            return Verdict::no(Certificate::Triangle(t));
        }
    }
    Verdict::yes()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub gadget: Graph,
    /// Level-0 row, ascending.
    pub distinguished_clique: Vec<usize>,
    pub source_n: usize,
    /// `(w, w')` for every vertex `w` off the distinguished clique; empty
    /// for the gadget without pendants.
    pub pendants: Vec<(usize, usize)>,
}

impl ReductionOutput {
    pub fn level_map(&self, v: usize, level: usize) -> usize {
        assert!(v < self.source_n && level < 4);
        4 * v + level
    }

    /// `(v, i)` for a column vertex, `None` for pendants.
    pub fn column_of(&self, w: usize) -> Option<(usize, usize)> {
        (w < 4 * self.source_n).then_some((w / 4, w % 4))
    }

    pub fn pendant_of(&self, w: usize) -> Option<usize> {
        if self.pendants.is_empty() {
            return None;
        }
        match self.column_of(w) {
            Some((v, i)) if i > 0 => Some(4 * self.source_n + 3 * v + i - 1),
            _ => None,
        }
    }

    /// The column cliques `C_v`.
    pub fn columns(&self) -> impl Iterator<Item = [usize; 4]> + '_ {
        (0..self.source_n).map(|v| [4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3])
    }

    /// `{C}` together with every pendant edge.
    pub fn pendant_partition(&self) -> Vec<Vec<usize>> {
        std::iter::once(self.distinguished_clique.clone())
            .chain(self.pendants.iter().map(|&(w, p)| vec![w, p]))
            .collect()
    }
}

pub fn build_g_prime(g: &Graph) -> Result<ReductionOutput> {
    let verdict = validate_class_g(g);
    if !verdict.answer {
        return Err(Error::NotInClassG(verdict.certificate));
    }
    let n = g.n();
    let mut edges = Vec::with_capacity(6 * n + n * (n - 1) / 2 + 3 * g.m());
    for v in 0..n {
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((4 * v + i, 4 * v + j));
            }
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            edges.push((4 * u, 4 * v));
        }
    }
    for (u, v) in g.edges() {
        for i in 1..4 {
            edges.push((4 * u + i, 4 * v + i));
        }
    }
    let gadget = Graph::new(4 * n, edges)?;
    require_diamond_free(&gadget)?;
    Ok(ReductionOutput {
        gadget,
        distinguished_clique: (0..n).map(|v| 4 * v).collect(),
        source_n: n,
        pendants: Vec::new(),
    })
}

pub fn build_g_double_prime(g: &Graph) -> Result<ReductionOutput> {
    let base = build_g_prime(g)?;
    let n = base.source_n;
    let mut edges = base.gadget.edge_list();
    let mut pendants = Vec::with_capacity(3 * n);
    for v in 0..n {
        for i in 1..4 {
            let pair = (4 * v + i, 4 * n + 3 * v + i - 1);
            edges.push(pair);
            pendants.push(pair);
        }
    }
    let gadget = Graph::new(7 * n, edges)?;
    require_diamond_free(&gadget)?;
    Ok(ReductionOutput {
        gadget,
        pendants,
        ..base
    })
}

/// A proper colouring with colours `0..3`, if one exists. The first vertex
/// of each component gets colour 0 and colours are opened in order, so the
/// answer is deterministic.
pub fn is_3_colorable_bf(g: &Graph, oracle: &Oracle) -> Result<Option<Vec<u8>>> {
    if g.n() > oracle.cap {
        return Err(Error::CapExceeded {
            size: g.n(),
            cap: oracle.cap,
        });
    }
    let order = bfs_order(g);
    let mut colour = vec![u8::MAX; g.n()];
    fn go(g: &Graph, order: &[usize], k: usize, opened: u8, colour: &mut [u8]) -> bool {
        let Some(&v) = order.get(k) else {
            return true;
        };
        for c in 0..(opened + 1).min(3) {
            if g.neighbors(v).iter().all(|&u| colour[u] != c) {
                colour[v] = c;
                if go(g, order, k + 1, opened.max(c + 1), colour) {
                    return true;
                }
            }
        }
        colour[v] = u8::MAX;
        false
    }
    Ok(go(g, &order, 0, 0, &mut colour).then_some(colour))
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let start = order.len();
        order.push(s);
        let mut head = start;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
    }
    order
}

/// `S1×{1} ∪ S2×{2} ∪ S3×{3}` for colour classes `S1, S2, S3`: a stable
/// set dominating the distinguished clique.
pub fn coloring_to_witness(out: &ReductionOutput, coloring: &[u8]) -> Vec<usize> {
    assert_eq!(coloring.len(), out.source_n);
    coloring
        .iter()
        .enumerate()
        .map(|(v, &c)| out.level_map(v, c as usize + 1))
        .collect()
}

/// Colour `v` by a level `i` with `(v, i)` in `stable`. `None` unless
/// `stable` is a stable set dominating the distinguished clique.
pub fn witness_to_coloring(out: &ReductionOutput, stable: &[usize]) -> Option<Vec<u8>> {
    if !out.gadget.is_stable(stable) || !out.gadget.dominates(stable, &out.distinguished_clique) {
        return None;
    }
    let mut coloring = vec![u8::MAX; out.source_n];
    for &w in stable {
        if let Some((v, i)) = out.column_of(w) {
            if i > 0 && coloring[v] == u8::MAX {
                coloring[v] = i as u8 - 1;
            }
        }
    }
    coloring.iter().all(|&c| c < 3).then_some(coloring)
}

/// Whether `coloring` is a proper colouring of `g` with at most three
/// colours.
pub fn is_proper_3_coloring(g: &Graph, coloring: &[u8]) -> bool {
    coloring.len() == g.n() && coloring.iter().all(|&c| c < 3) && g.edges().all(|(u, v)| coloring[u] != coloring[v])
}

/// The seven statements, each evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropositionReport {
    /// Statements 1 to 7, in order: not 3-colourable; `C` strong in `G'`;
    /// `G'` has a strong clique; `C` strong in `G''`; every vertex of `G''`
    /// in a strong clique; `{C}` plus the pendant edges all strong; `G''`
    /// partitions into strong cliques.
    pub statements: [bool; 7],
    pub coloring: Option<Vec<u8>>,
    /// Stable set dominating `C` in `G'`, when `C` is not strong.
    pub witness: Option<Vec<usize>>,
}

impl PropositionReport {
    pub fn not_3_colorable(&self) -> bool {
        self.statements[0]
    }
}

impl fmt::Display for PropositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.statements.iter().enumerate() {
            writeln!(f, "statement_{}: {}", i + 1, if *s { "true" } else { "false" })?;
        }
        Ok(())
    }
}

/// Evaluate all seven statements with the oracle and check they agree,
/// transporting witnesses both ways between colourings and dominating
/// stable sets.
pub fn check_proposition_equivalences(g: &Graph, oracle: &Oracle) -> Result<PropositionReport> {
    let gp = build_g_prime(g)?;
    let gpp = build_g_double_prime(g)?;
    let coloring = is_3_colorable_bf(g, oracle)?;

    let c_in_gp = oracle.is_strong_clique(&gp.gadget, &gp.distinguished_clique)?;
    let suite_gp = oracle.decision_suite(&gp.gadget, None)?;
    let c_in_gpp = oracle.is_strong_clique(&gpp.gadget, &gpp.distinguished_clique)?;
    let partition = gpp.pendant_partition();
    let suite_gpp = oracle.decision_suite(&gpp.gadget, Some(&partition))?;

    let statements = [
        coloring.is_none(),
        c_in_gp.strong,
        suite_gp.strong_clique_existence,
        c_in_gpp.strong,
        suite_gpp.strong_clique_vertex_cover,
        suite_gpp.strong_clique_partition == Some(true),
        suite_gpp.strong_clique_partition_existence,
    ];
    if let Some(i) = statements.iter().position(|&s| s != statements[0]) {
        return Err(Error::EquivalenceViolation(format!(
            "statement {} is {} but statement 1 is {}",
            i + 1,
            statements[i],
            statements[0]
        )));
    }

    if let Some(col) = &coloring {
        if !is_proper_3_coloring(g, col) {
            return Err(Error::EquivalenceViolation("colouring is not proper".into()));
        }
        for out in [&gp, &gpp] {
            let w = coloring_to_witness(out, col);
            if !out.gadget.is_stable(&w) || !out.gadget.dominates(&w, &out.distinguished_clique) {
                return Err(Error::EquivalenceViolation(
                    "colouring does not map to a dominating stable set".into(),
                ));
            }
        }
    }
    for (out, report) in [(&gp, &c_in_gp), (&gpp, &c_in_gpp)] {
        if let Some(w) = &report.witness {
            match witness_to_coloring(out, w) {
                Some(col) if is_proper_3_coloring(g, &col) => {}
                _ => {
                    return Err(Error::EquivalenceViolation(
                        "dominating stable set does not map to a colouring".into(),
                    ))
                }
            }
        }
    }

    Ok(PropositionReport {
        statements,
        coloring,
        witness: c_in_gp.witness,
    })
}
