//! Exact, exponential-time ground truth for strong cliques and CIS graphs.
//!
//! Everything here works from definitions: maximal cliques and maximal
//! stable sets come from Bron–Kerbosch with pivoting (stable sets via the
//! complement), and a clique is strong iff no stable set outside it
//! dominates it. The searches are capped so that a large input fails fast
//! with [`Error::CapExceeded`] instead of running for hours.
//!
//! The cap bounds the exponent of each search: the vertex count for
//! whole-graph enumerations (maximal stable sets, CIS, `alpha`/`omega`) and
//! the clique size for the dominating-stable-set search.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verdict::{Certificate, Verdict};

pub const DEFAULT_CAP: usize = 24;

/// Environment variable overriding [`DEFAULT_CAP`].
pub const CAP_ENV: &str = "STRONGCLIQUE_ORACLE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

/// Outcome of a strong-clique check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongCliqueReport {
    pub clique: Vec<usize>,
    pub strong: bool,
    /// Stable set outside the clique dominating it; present iff not strong.
    pub witness: Option<Vec<usize>>,
}

/// Answers to the five strong-clique decision problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionReport {
    /// Every maximal clique with its strongness.
    pub maximal_cliques: Vec<StrongCliqueReport>,
    /// Each clique of the supplied partition, if one was given.
    pub partition_cliques: Option<Vec<StrongCliqueReport>>,
    /// Some clique is strong.
    pub strong_clique_existence: bool,
    /// Every vertex lies in a strong clique.
    pub strong_clique_vertex_cover: bool,
    /// A vertex in no strong clique, when the cover fails.
    pub uncovered_vertex: Option<usize>,
    /// Every clique of the supplied partition is strong.
    pub strong_clique_partition: Option<bool>,
    /// The vertex set splits into strong cliques.
    pub strong_clique_partition_existence: bool,
    pub strong_partition: Option<Vec<Vec<usize>>>,
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Self { cap }
    }

    /// Cap from [`CAP_ENV`] when set to a number, else the default.
    pub fn from_env() -> Self {
        std::env::var(CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Self::new)
            .unwrap_or_default()
    }

    fn check(&self, size: usize) -> Result<()> {
        if size > self.cap {
            Err(Error::CapExceeded { size, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// Every maximal stable set once, each ascending, in lexicographic order.
    pub fn maximal_stable_sets(&self, g: &Graph) -> Result<Vec<Vec<usize>>> {
        self.check(g.n())?;
        let rows = complement_rows(g);
        Ok(bron_kerbosch(&rows))
    }

    pub fn is_strong_clique(&self, g: &Graph, clique: &[usize]) -> Result<StrongCliqueReport> {
        validate_clique(g, clique)?;
        self.check(clique.len())?;
        let rows = g.adjacency_rows();
        Ok(strong_report(&rows, clique))
    }

    /// Whether every maximal clique meets every maximal stable set.
    pub fn is_cis_bruteforce(&self, g: &Graph) -> Result<Verdict> {
        let stables = self.maximal_stable_sets(g)?;
        let cliques = maximal_cliques(g);
        let n = g.n();
        let stable_bits: Vec<FixedBitSet> = stables.iter().map(|s| to_bits(n, s)).collect();
        for clique in &cliques {
            let c = to_bits(n, clique);
            if let Some(i) = stable_bits.iter().position(|s| s.is_disjoint(&c)) {
                return Ok(Verdict::no(Certificate::CliqueStablePair {
                    clique: clique.clone(),
                    stable: stables[i].clone(),
                }));
            }
        }
        Ok(Verdict::yes())
    }

    /// `(alpha, omega)`: largest stable set and largest clique.
    pub fn alpha_omega(&self, g: &Graph) -> Result<(usize, usize)> {
        self.check(g.n())?;
        let alpha = max_clique_size(&complement_rows(g));
        let omega = max_clique_size(&g.adjacency_rows());
        Ok((alpha, omega))
    }

    /// Brute-force answers to the five strong-clique problems.
    ///
    /// A strong clique is always maximal (a vertex extending a smaller
    /// clique dominates it alone), so cover and partition questions only
    /// need the maximal cliques.
    pub fn decision_suite(&self, g: &Graph, partition: Option<&[Vec<usize>]>) -> Result<DecisionReport> {
        if let Some(parts) = partition {
            validate_partition(g, parts)?;
        }
        let rows = g.adjacency_rows();
        let cliques = maximal_cliques(g);
        for c in &cliques {
            self.check(c.len())?;
        }
        if let Some(parts) = partition {
            for c in parts {
                self.check(c.len())?;
            }
        }
        let reports: Vec<StrongCliqueReport> = cliques.iter().map(|c| strong_report(&rows, c)).collect();
        let strong: Vec<&Vec<usize>> = reports.iter().filter(|r| r.strong).map(|r| &r.clique).collect();

        let n = g.n();
        let mut covered = vec![false; n];
        for c in &strong {
            for &v in c.iter() {
                covered[v] = true;
            }
        }
        let uncovered_vertex = covered.iter().position(|&c| !c);

        let partition_cliques = partition.map(|parts| {
            parts
                .iter()
                .map(|c| {
                    let mut c = c.clone();
                    c.sort_unstable();
                    strong_report(&rows, &c)
                })
                .collect::<Vec<_>>()
        });
        let strong_clique_partition = partition_cliques
            .as_ref()
            .map(|reports| reports.iter().all(|r| r.strong));

        let strong_partition = if uncovered_vertex.is_some() {
            None
        } else {
            exact_cover(n, &strong)
        };

        Ok(DecisionReport {
            strong_clique_existence: !strong.is_empty(),
            strong_clique_vertex_cover: uncovered_vertex.is_none(),
            uncovered_vertex,
            strong_clique_partition,
            strong_clique_partition_existence: strong_partition.is_some(),
            strong_partition,
            partition_cliques,
            maximal_cliques: reports,
        })
    }
}

/// Every maximal clique once, each ascending, in lexicographic order.
/// Output-sensitive, so no cap applies.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    bron_kerbosch(&g.adjacency_rows())
}

/// Whether every induced `P4` `a-b-c-d` has a vertex adjacent to `b` and
/// `c` but to neither `a` nor `d`. Polynomial; no cap.
pub fn all_p4_settled(g: &Graph) -> Verdict {
    let rows = g.adjacency_rows();
    let n = g.n();
    for b in 0..n {
        for &c in g.neighbors(b) {
            let mut common = rows[b].clone();
            common.intersect_with(&rows[c]);
            for &a in g.neighbors(b) {
                if a == c || rows[c].contains(a) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d == b || rows[b].contains(d) || rows[a].contains(d) {
                        continue;
                    }
                    let settled = common.ones().any(|x| !rows[a].contains(x) && !rows[d].contains(x));
                    if !settled {
                        return Verdict::no(Certificate::UnsettledP4 { path: [a, b, c, d] });
                    }
                }
            }
        }
    }
    Verdict::yes()
}

/// Whether every edge lies in the closed neighbourhood of a simplicial
/// vertex, checked pair by pair.
pub fn is_edge_simplicial_bruteforce(g: &Graph) -> bool {
    let simplicial: Vec<usize> = (0..g.n()).filter(|&v| g.is_clique(g.neighbors(v))).collect();
    g.edges().all(|(a, b)| {
        simplicial
            .iter()
            .any(|&v| (v == a || g.has_edge(v, a)) && (v == b || g.has_edge(v, b)))
    })
}

fn validate_clique(g: &Graph, clique: &[usize]) -> Result<()> {
    let n = g.n();
    if let Some(&v) = clique.iter().find(|&&v| v >= n) {
        return Err(Error::IndexOutOfRange { vertex: v, n });
    }
    match g.find_non_edge(clique) {
        Some((u, v)) => Err(Error::NotAClique { u, v }),
        None => Ok(()),
    }
}

fn validate_partition(g: &Graph, parts: &[Vec<usize>]) -> Result<()> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::BadPartition(format!("part {i} is empty")));
        }
        for &v in part {
            if v >= n {
                return Err(Error::BadPartition(format!("vertex {v} out of range")));
            }
            if owner[v] != usize::MAX {
                return Err(Error::BadPartition(format!(
                    "vertex {v} is in parts {} and {i}",
                    owner[v]
                )));
            }
            owner[v] = i;
        }
        if let Some((u, v)) = g.find_non_edge(part) {
            return Err(Error::BadPartition(format!(
                "part {i} is not a clique: {u} and {v} are not adjacent"
            )));
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::BadPartition(format!("vertex {v} is not covered")));
    }
    Ok(())
}

fn to_bits(n: usize, set: &[usize]) -> FixedBitSet {
    let mut bits = FixedBitSet::with_capacity(n);
    for &v in set {
        bits.insert(v);
    }
    bits
}

fn complement_rows(g: &Graph) -> Vec<FixedBitSet> {
    let n = g.n();
    g.adjacency_rows()
        .into_iter()
        .enumerate()
        .map(|(v, mut row)| {
            row.toggle_range(..);
            row.set(v, false);
            row
        })
        .take(n)
        .collect()
}

fn bron_kerbosch(rows: &[FixedBitSet]) -> Vec<Vec<usize>> {
    let n = rows.len();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut r = Vec::new();
    expand(rows, &mut r, all, FixedBitSet::with_capacity(n), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(rows: &[FixedBitSet], r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet, out: &mut Vec<Vec<usize>>) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection(&rows[u]).count())
        .expect("p is non-empty");
    let branch: Vec<usize> = p.ones().filter(|&v| !rows[pivot].contains(v)).collect();
    for v in branch {
        r.push(v);
        let mut p2 = p.clone();
        p2.intersect_with(&rows[v]);
        let mut x2 = x.clone();
        x2.intersect_with(&rows[v]);
        expand(rows, r, p2, x2, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

fn max_clique_size(rows: &[FixedBitSet]) -> usize {
    fn grow(rows: &[FixedBitSet], size: usize, mut p: FixedBitSet, best: &mut usize) {
        if p.is_clear() {
            *best = (*best).max(size);
            return;
        }
        while let Some(v) = p.minimum() {
            if size + p.count_ones(..) <= *best {
                return;
            }
            let mut next = p.clone();
            next.intersect_with(&rows[v]);
            grow(rows, size + 1, next, best);
            p.set(v, false);
        }
    }
    let n = rows.len();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut best = 0;
    grow(rows, 0, all, &mut best);
    best
}

fn strong_report(rows: &[FixedBitSet], clique: &[usize]) -> StrongCliqueReport {
    let witness = dominating_stable_set(rows, clique);
    StrongCliqueReport {
        clique: clique.to_vec(),
        strong: witness.is_none(),
        witness,
    }
}

/// A stable set disjoint from `clique` in which every clique vertex has a
/// neighbour, if one exists.
///
/// Backtracking: repeatedly take the undominated clique vertex with the
/// fewest usable neighbours and branch on which of them dominates it. A
/// neighbour is usable while it is outside the clique, not yet chosen, and
/// not adjacent to a chosen vertex. Each step dominates at least one more
/// clique vertex, so witnesses never exceed the clique size.
pub(crate) fn dominating_stable_set(rows: &[FixedBitSet], clique: &[usize]) -> Option<Vec<usize>> {
    let n = rows.len();
    let mut blocked = to_bits(n, clique);
    let candidates: Vec<FixedBitSet> = clique
        .iter()
        .map(|&c| {
            let mut cand = rows[c].clone();
            cand.difference_with(&blocked);
            cand
        })
        .collect();
    let mut dominated = vec![false; clique.len()];
    let mut chosen = Vec::new();
    if search(rows, &candidates, &mut blocked, &mut dominated, &mut chosen) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

fn search(
    rows: &[FixedBitSet],
    candidates: &[FixedBitSet],
    blocked: &mut FixedBitSet,
    dominated: &mut [bool],
    chosen: &mut Vec<usize>,
) -> bool {
    let mut target: Option<(usize, Vec<usize>)> = None;
    for (i, cand) in candidates.iter().enumerate() {
        if dominated[i] {
            continue;
        }
        let usable: Vec<usize> = cand.ones().filter(|&x| !blocked.contains(x)).collect();
        if usable.is_empty() {
            return false;
        }
        if target.as_ref().is_none_or(|(_, best)| usable.len() < best.len()) {
            target = Some((i, usable));
        }
    }
    let Some((_, usable)) = target else {
        return true;
    };
    for x in usable {
        let newly: Vec<usize> = (0..candidates.len())
            .filter(|&i| !dominated[i] && candidates[i].contains(x))
            .collect();
        let saved = blocked.clone();
        blocked.insert(x);
        blocked.union_with(&rows[x]);
        for &i in &newly {
            dominated[i] = true;
        }
        chosen.push(x);
        if search(rows, candidates, blocked, dominated, chosen) {
            return true;
        }
        chosen.pop();
        for &i in &newly {
            dominated[i] = false;
        }
        *blocked = saved;
    }
    false
}

/// Partition of `0..n` into members of `sets`, by exact-cover
/// backtracking on the vertex with the fewest fitting sets.
fn exact_cover(n: usize, sets: &[&Vec<usize>]) -> Option<Vec<Vec<usize>>> {
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, s) in sets.iter().enumerate() {
        for &v in s.iter() {
            containing[v].push(i);
        }
    }
    let mut covered = vec![false; n];
    let mut picked = Vec::new();
    fn go(sets: &[&Vec<usize>], containing: &[Vec<usize>], covered: &mut [bool], picked: &mut Vec<usize>) -> bool {
        let fits = |i: &usize| sets[*i].iter().all(|&v| !covered[v]);
        let mut best: Option<(usize, usize)> = None;
        for v in 0..covered.len() {
            if covered[v] {
                continue;
            }
            let options = containing[v].iter().filter(|i| fits(i)).count();
            if options == 0 {
                return false;
            }
            if best.is_none_or(|(_, k)| options < k) {
                best = Some((v, options));
            }
        }
        let Some((v, _)) = best else {
            return true;
        };
        let options: Vec<usize> = containing[v].iter().copied().filter(|i| fits(i)).collect();
        for i in options {
            for &u in sets[i].iter() {
                covered[u] = true;
            }
            picked.push(i);
            if go(sets, containing, covered, picked) {
                return true;
            }
            picked.pop();
            for &u in sets[i].iter() {
                covered[u] = false;
            }
        }
        false
    }
    go(sets, &containing, &mut covered, &mut picked).then(|| picked.iter().map(|&i| sets[i].clone()).collect())
}
