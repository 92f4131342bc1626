//! Wall-clock scaling measurements for the linear edge simplicial test.

use std::time::{Duration, Instant};

use crate::edge_simplicial::is_edge_simplicial_linear;
use crate::error::{Error, Result};
use crate::generate::{biclique_of_size, clique_simplicial_of_size, rook_of_size};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchFamily {
    Rook,
    CliqueSimplicial,
    Biclique,
}

impl std::str::FromStr for BenchFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rook" => Ok(BenchFamily::Rook),
            "cliquesim" | "clique_simplicial" | "random_clique_simplicial" => Ok(BenchFamily::CliqueSimplicial),
            "biclique" => Ok(BenchFamily::Biclique),
            _ => Err(Error::BadParams(format!(
                "unknown bench family '{s}' (expected rook, cliquesim or biclique)"
            ))),
        }
    }
}

impl BenchFamily {
    pub fn name(self) -> &'static str {
        match self {
            BenchFamily::Rook => "rook",
            BenchFamily::CliqueSimplicial => "cliquesim",
            BenchFamily::Biclique => "biclique",
        }
    }

    /// A member with `n + m` close to `target`.
    pub fn instance(self, target: usize, seed: u64) -> Graph {
        match self {
            BenchFamily::Rook => rook_of_size(target),
            BenchFamily::CliqueSimplicial => clique_simplicial_of_size(target, seed),
            BenchFamily::Biclique => biclique_of_size(target),
        }
    }
}

/// Median wall time of `is_edge_simplicial_linear` on `g` over `runs`
/// timed runs, after one untimed warm-up.
pub fn median_edge_simplicial_time(g: &Graph, runs: usize) -> Duration {
    std::hint::black_box(is_edge_simplicial_linear(g));
    let mut times: Vec<Duration> = (0..runs.max(1))
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(is_edge_simplicial_linear(std::hint::black_box(g)));
            start.elapsed()
        })
        .collect();
    times.sort_unstable();
    times[times.len() / 2]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalingRow {
    pub target: usize,
    pub n: usize,
    pub m: usize,
    pub median: Duration,
}

impl ScalingRow {
    pub fn size(&self) -> usize {
        self.n + self.m
    }
}

pub fn scaling_table(family: BenchFamily, sizes: &[usize], runs: usize, seed: u64) -> Vec<ScalingRow> {
    sizes
        .iter()
        .map(|&target| {
            let g = family.instance(target, seed);
            ScalingRow {
                target,
                n: g.n(),
                m: g.m(),
                median: median_edge_simplicial_time(&g, runs),
            }
        })
        .collect()
}

/// Time growth between consecutive rows, normalised to a doubling of
/// `n + m`.
pub fn doubling_ratios(rows: &[ScalingRow]) -> Vec<f64> {
    rows.windows(2)
        .map(|w| {
            let t = w[1].median.as_secs_f64() / w[0].median.as_secs_f64().max(1e-9);
            let s = w[1].size() as f64 / w[0].size() as f64;
            t.powf(std::f64::consts::LN_2 / s.ln())
        })
        .collect()
}
