//! Command-line front-end. Reports are `key: value` lines in a fixed order.
//! Exit code 0 means the headline property holds, 1 that it fails (with a
//! certificate), 2 an input or usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cis::{classify_diamond_free_cis, ComponentClass};
use crate::diamond::is_diamond_free;
use crate::edge_simplicial::{degree_greedy_stable_set, is_edge_simplicial, is_edge_simplicial_linear};
use crate::error::{Error, Result};
use crate::ffree::{cis_for_f_free, Pattern};
use crate::generate::{generate, Family};
use crate::io::{emit_edge_list, emit_graph6, parse_auto, Format, GraphDocument};
use crate::oracle::{all_p4_settled, Oracle};
use crate::reductions::{build_g_double_prime, build_g_prime};
use crate::timing::{doubling_ratios, scaling_table, BenchFamily};
use crate::verdict::join;

#[derive(Debug, Parser)]
#[command(name = "strongclique", version, about = "Strong cliques and CIS graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Diamond-freeness, CIS classification and certificates.
    Analyze { file: PathBuf },
    /// Linear-time edge simplicial test (diamond-free input).
    EdgeSimplicial { file: PathBuf },
    /// Whether a clique is strong, by exhaustive search.
    CheckStrong {
        file: PathBuf,
        /// Comma-separated vertex indices.
        #[arg(long)]
        clique: String,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// All brute-force strong-clique answers; exit status follows CIS.
    Oracle {
        file: PathBuf,
        /// Cliques separated by ';', vertices by ','.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// CIS test for a graph avoiding a small induced pattern.
    FfreeCis {
        file: PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Build a hardness gadget from a source graph.
    Reduce {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: GadgetKind,
        #[arg(long, default_value = "edgelist")]
        emit: String,
    },
    /// Generate a family member, e.g. `gen rook 3` or `gen biclique m=2 n=3`.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, default_value = "edgelist")]
        emit: String,
    },
    /// Time the edge simplicial test across sizes.
    Bench {
        #[arg(long)]
        family: String,
        /// Comma-separated target values of n + m.
        #[arg(long, value_delimiter = ',', default_value = "10000,20000,40000,80000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GadgetKind {
    #[value(name = "gprime")]
    GPrime,
    #[value(name = "gdoubleprime")]
    GDoublePrime,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutcome {
    pub code: i32,
    pub report: String,
}

/// Run one command; `argv[0]` is the program name.
pub fn run_cli<I, T>(argv: I) -> CliOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return CliOutcome {
                code,
                report: e.render().to_string(),
            };
        }
    };
    match run(cli.command) {
        Ok((holds, report)) => CliOutcome {
            code: if holds { 0 } else { 1 },
            report,
        },
        Err(e) => CliOutcome {
            code: 2,
            report: format!("error: {e}\n"),
        },
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read(file: &PathBuf) -> Result<GraphDocument> {
    let text =
        std::fs::read_to_string(file).map_err(|e| Error::BadParams(format!("cannot read {}: {e}", file.display())))?;
    parse_auto(&text)
}

fn oracle(cap: Option<usize>) -> Oracle {
    cap.map(Oracle::new).unwrap_or_else(Oracle::from_env)
}

fn parse_set(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::BadParams(format!("'{t}' is not a vertex index")))
        })
        .collect()
}

fn run(command: Command) -> Result<(bool, String)> {
    let mut out = String::new();
    macro_rules! line {
        ($($arg:tt)*) => { writeln!(out, $($arg)*).expect("writing to a String") };
    }
    let holds = match command {
        Command::Analyze { file } => {
            let doc = read(&file)?;
            let g = &doc.graph;
            line!("vertices: {}", g.n());
            line!("edges: {}", g.m());
            let df = is_diamond_free(g);
            line!("diamond_free: {}", yes_no(df.answer));
            if !df.answer {
                line!("certificate: {}", df.certificate);
                return Ok((false, out));
            }
            let c = classify_diamond_free_cis(g)?;
            line!("cis: {}", yes_no(c.is_cis()));
            let classes: Vec<String> = c.components.iter().map(|c| c.class.to_string()).collect();
            line!("class: {}", classes.join("; "));
            line!("edge_simplicial: {}", yes_no(is_edge_simplicial_linear(g).answer));
            line!("components: {}", c.components.len());
            for (i, comp) in c.components.iter().enumerate() {
                line!("component {}: {} vertices={}", i + 1, comp.class, join(&comp.vertices));
                if comp.class == ComponentClass::NotCis {
                    let h = g.induced(&comp.vertices);
                    let cert = is_edge_simplicial_linear(&h).certificate.relabel(&comp.vertices);
                    line!("certificate {}: {}", i + 1, cert);
                }
            }
            c.is_cis()
        }
        Command::EdgeSimplicial { file } => {
            let doc = read(&file)?;
            let g = &doc.graph;
            let v = is_edge_simplicial(g)?;
            line!("vertices: {}", g.n());
            line!("edges: {}", g.m());
            line!("edge_simplicial: {}", yes_no(v.answer));
            line!("stable_set: {}", join(&degree_greedy_stable_set(g).sorted_members()));
            if !v.answer {
                line!("certificate: {}", v.certificate);
            }
            v.answer
        }
        Command::CheckStrong { file, clique, cap } => {
            let doc = read(&file)?;
            let clique = parse_set(&clique)?;
            let r = oracle(cap).is_strong_clique(&doc.graph, &clique)?;
            line!("clique: {}", join(&r.clique));
            line!("strong: {}", yes_no(r.strong));
            if let Some(w) = &r.witness {
                line!("witness: {}", join(w));
            }
            r.strong
        }
        Command::Oracle { file, partition, cap } => {
            let doc = read(&file)?;
            let g = &doc.graph;
            let o = oracle(cap);
            let parts = partition
                .as_deref()
                .map(|p| p.split(';').map(parse_set).collect::<Result<Vec<_>>>())
                .transpose()?;
            let r = o.decision_suite(g, parts.as_deref())?;
            let cis = o.is_cis_bruteforce(g)?;
            let (alpha, omega) = o.alpha_omega(g)?;
            line!("vertices: {}", g.n());
            line!("edges: {}", g.m());
            line!("cis: {}", yes_no(cis.answer));
            line!("maximal_cliques: {}", r.maximal_cliques.len());
            line!(
                "strong_cliques: {}",
                r.maximal_cliques.iter().filter(|c| c.strong).count()
            );
            line!("strong_clique_existence: {}", yes_no(r.strong_clique_existence));
            line!("strong_clique_vertex_cover: {}", yes_no(r.strong_clique_vertex_cover));
            if let Some(v) = r.uncovered_vertex {
                line!("uncovered_vertex: {v}");
            }
            match r.strong_clique_partition {
                Some(b) => line!("strong_clique_partition: {}", yes_no(b)),
                None => line!("strong_clique_partition: n/a"),
            }
            line!(
                "strong_clique_partition_existence: {}",
                yes_no(r.strong_clique_partition_existence)
            );
            if let Some(p) = &r.strong_partition {
                let parts: Vec<String> = p.iter().map(|c| join(c)).collect();
                line!("strong_partition: {}", parts.join(";"));
            }
            line!("p4_settled: {}", yes_no(all_p4_settled(g).answer));
            line!("alpha: {alpha}");
            line!("omega: {omega}");
            if !cis.answer {
                line!("certificate: {}", cis.certificate);
            }
            line!("---");
            for c in r.partition_cliques.iter().flatten().chain(&r.maximal_cliques) {
                match &c.witness {
                    None => line!("clique {} strong", join(&c.clique)),
                    Some(w) => line!("clique {} dominated_by {}", join(&c.clique), join(w)),
                }
            }
            cis.answer
        }
        Command::FfreeCis { file, pattern, cap } => {
            let doc = read(&file)?;
            let p: Pattern = pattern.parse()?;
            let v = cis_for_f_free(&doc.graph, p, &oracle(cap))?;
            line!("pattern: {p}");
            line!("f_free: yes");
            line!("cis: {}", yes_no(v.answer));
            if !v.answer {
                line!("certificate: {}", v.certificate);
            }
            v.answer
        }
        Command::Reduce { file, kind, emit } => {
            let doc = read(&file)?;
            let format: Format = emit.parse()?;
            let (name, r) = match kind {
                GadgetKind::GPrime => ("gprime", build_g_prime(&doc.graph)?),
                GadgetKind::GDoublePrime => ("gdoubleprime", build_g_double_prime(&doc.graph)?),
            };
            let gadget = GraphDocument::new(r.gadget.clone(), format);
            match format {
                Format::Graph6 => line!("{}", emit_graph6(&gadget.graph)),
                Format::EdgeList => {
                    let mut comments = vec![
                        format!("gadget: {name}"),
                        format!("source_vertices: {}", r.source_n),
                        format!("distinguished_clique: {}", join(&r.distinguished_clique)),
                        "vertex (v,i) is 4v+i".to_string(),
                    ];
                    if !r.pendants.is_empty() {
                        comments.push(format!("pendant of (v,i), i>0, is {}+3v+i-1", 4 * r.source_n));
                    }
                    out.push_str(&emit_edge_list(&gadget, &comments));
                }
            }
            true
        }
        Command::Gen { family, params, emit } => {
            let format: Format = emit.parse()?;
            let family = Family::from_args(&family, &params)?;
            let doc = generate(&family)?;
            match format {
                Format::Graph6 => line!("{}", emit_graph6(&doc.graph)),
                Format::EdgeList => out.push_str(&emit_edge_list(&doc, &[format!("family: {family}")])),
            }
            true
        }
        Command::Bench {
            family,
            sizes,
            runs,
            seed,
        } => {
            let family: BenchFamily = family.parse()?;
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(Error::BadParams("sizes must be positive".into()));
            }
            let rows = scaling_table(family, &sizes, runs, seed);
            let ratios = doubling_ratios(&rows);
            line!("family: {}", family.name());
            line!("runs: {runs}");
            line!("target\tn\tm\tn+m\tmedian_us\tratio_per_doubling");
            for (i, row) in rows.iter().enumerate() {
                let ratio = if i == 0 {
                    "-".to_string()
                } else {
                    format!("{:.2}", ratios[i - 1])
                };
                line!(
                    "{}\t{}\t{}\t{}\t{:.1}\t{}",
                    row.target,
                    row.n,
                    row.m,
                    row.size(),
                    row.median.as_secs_f64() * 1e6,
                    ratio
                );
            }
            true
        }
    };
    Ok((holds, out))
}
