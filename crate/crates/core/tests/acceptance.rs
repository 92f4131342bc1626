//! The release gate. One test runs every criterion in turn (so timing
//! measurements are not disturbed by parallel tests), prints a PASS/FAIL
//! line for each, and fails if any criterion failed.

mod common;

use std::io::Write;
use std::time::Instant;

use strongclique::cis::{classify_diamond_free_cis, ComponentClass};
use strongclique::diamond::{is_diamond_free, maximal_cliques_diamond_free};
use strongclique::edge_simplicial::{
    companion_multigraph, degree_greedy_stable_set, is_edge_simplicial_linear, simplicial_vertices,
};
use strongclique::ffree::{cis_for_f_free, find_induced, Pattern};
use strongclique::generate::{
    biclique, cycle, grotzsch, path, petersen, random_clique_simplicial, random_triangle_free, rook,
};
use strongclique::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, Format, GraphDocument};
use strongclique::oracle::{all_p4_settled, is_edge_simplicial_bruteforce, maximal_cliques, Oracle};
use strongclique::reductions::{build_g_double_prime, build_g_prime, check_proposition_equivalences, validate_class_g};
use strongclique::timing::{doubling_ratios, scaling_table, BenchFamily};
use strongclique::Graph;

struct Corpus {
    small: Vec<Graph>,
    connected_diamond_free: Vec<Graph>,
    random: Vec<Graph>,
}

impl Corpus {
    /// Connected diamond-free graphs up to 8 vertices, then the random
    /// diamond-free graphs.
    fn diamond_free(&self) -> impl Iterator<Item = &Graph> {
        self.connected_diamond_free.iter().chain(&self.random)
    }
}

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn fail_if(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        let shown: Vec<&String> = failures.iter().take(5).collect();
        Err(format!("{summary}; {} failures, first: {shown:?}", failures.len()))
    }
}

fn algorithm_equivalence(c: &Corpus) -> Outcome {
    let mut failures = Vec::new();
    let mut yes = 0;
    let mut total = 0;
    for g in c.diamond_free() {
        total += 1;
        let v = is_edge_simplicial_linear(g);
        let expected = is_edge_simplicial_bruteforce(g);
        yes += expected as usize;
        if v.answer != expected || !v.verify(g) {
            failures.push(emit_graph6(g));
        }
    }
    fail_if(
        failures,
        format!(
            "{total} graphs ({} exhaustive, {} random), {yes} edge simplicial",
            c.connected_diamond_free.len(),
            c.random.len()
        ),
    )
}

fn classifier_equivalence(c: &Corpus) -> Outcome {
    let oracle = Oracle::default();
    let mut failures = Vec::new();
    let mut cis = 0;
    let mut total = 0;
    for g in c.diamond_free() {
        total += 1;
        let class = classify_diamond_free_cis(g).unwrap();
        let expected = oracle.is_cis_bruteforce(g).unwrap().answer;
        cis += expected as usize;
        if class.is_cis() != expected || !class.verify(g) {
            failures.push(emit_graph6(g));
        }
    }

    let tag = |g: &Graph| {
        let c = classify_diamond_free_cis(g).unwrap();
        assert_eq!(c.components.len(), 1);
        (c.is_cis(), c.components[0].class)
    };
    let mut named = 0;
    for m in 2..=6 {
        for n in m..=6 {
            named += 1;
            if tag(&biclique(m, n)) != (true, ComponentClass::CompleteBipartite(m, n)) {
                failures.push(format!("K_{{{m},{n}}}"));
            }
        }
    }
    for n in 3..=6 {
        named += 1;
        if tag(&rook(n)) != (true, ComponentClass::Rook(n)) {
            failures.push(format!("rook {n}"));
        }
    }
    for (name, g) in [("C5", cycle(5)), ("Petersen", petersen()), ("P4", path(4))] {
        named += 1;
        if tag(&g) != (false, ComponentClass::NotCis) || oracle.is_cis_bruteforce(&g).unwrap().answer {
            failures.push(name.to_string());
        }
    }
    for seed in 0..200 {
        named += 1;
        let g = random_clique_simplicial(1 + seed as usize % 12, 2, 5, seed).unwrap();
        let c = classify_diamond_free_cis(&g).unwrap();
        if !c.is_cis() || c.components.iter().any(|c| c.class != ComponentClass::CliqueSimplicial) {
            failures.push(format!("random_clique_simplicial seed {seed}"));
        }
    }
    fail_if(
        failures,
        format!("{total} corpus graphs ({cis} CIS), {named} named-family checks"),
    )
}

fn alpha_omega_bound(c: &Corpus) -> Outcome {
    let oracle = Oracle::new(36);
    let mut failures = Vec::new();
    let mut checked = 0;
    let all_diamond_free = c.small.iter().filter(|g| is_diamond_free(g).answer).chain(&c.random);
    for g in all_diamond_free {
        if !oracle.is_cis_bruteforce(g).unwrap().answer {
            continue;
        }
        checked += 1;
        let (a, w) = oracle.alpha_omega(g).unwrap();
        if a * w < g.n() {
            failures.push(format!("{} alpha={a} omega={w}", emit_graph6(g)));
        }
    }
    for n in 3..=6 {
        let (a, w) = oracle.alpha_omega(&rook(n)).unwrap();
        if a * w != n * n {
            failures.push(format!("rook {n}: alpha={a} omega={w}"));
        }
    }
    fail_if(
        failures,
        format!("{checked} diamond-free CIS graphs, equality on rook 3..6"),
    )
}

fn class_g_sources() -> Vec<(String, Graph)> {
    let mut sources: Vec<(String, Graph)> = vec![
        ("K_{3,3}".into(), biclique(3, 3)),
        ("K_{3,4}".into(), biclique(3, 4)),
        ("K_{3,5}".into(), biclique(3, 5)),
        ("K_{4,4}".into(), biclique(4, 4)),
        ("K_{5,5}".into(), biclique(5, 5)),
        ("K_{6,6}".into(), biclique(6, 6)),
        ("cube".into(), common::cube()),
        ("Petersen".into(), petersen()),
        ("Grotzsch".into(), grotzsch()),
        ("Chvatal".into(), common::chvatal()),
    ];
    // Grötzsch plus a vertex on the stable triple {0, 2, 10}
    let mut edges = grotzsch().edge_list();
    edges.extend([(0, 11), (2, 11), (10, 11)]);
    sources.push(("Grotzsch+1".into(), Graph::new(12, edges).unwrap()));

    let mut seed = 0;
    while sources.len() < 26 {
        let n = 8 + (seed as usize % 5);
        let g = random_triangle_free(n, 0.7, seed).unwrap();
        if validate_class_g(&g).answer {
            sources.push((format!("random n={n} seed={seed}"), g));
        }
        seed += 1;
    }
    sources
}

fn proposition_harness() -> Outcome {
    let oracle = Oracle::default();
    let mut failures = Vec::new();
    let sources = class_g_sources();
    let mut uncolourable = 0;
    for (name, g) in &sources {
        assert!(validate_class_g(g).answer, "{name}");
        match check_proposition_equivalences(g, &oracle) {
            Ok(r) => {
                uncolourable += r.not_3_colorable() as usize;
                // each statement again, straight from the report
                if r.statements.iter().any(|&s| s != r.not_3_colorable()) {
                    failures.push(name.clone());
                }
                if r.coloring.is_some() == r.not_3_colorable() || r.witness.is_some() == r.not_3_colorable() {
                    failures.push(format!("{name}: witness presence"));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    if uncolourable < 3 {
        failures.push(format!("only {uncolourable} non-3-colourable sources"));
    }
    fail_if(
        failures,
        format!("{} sources, {uncolourable} not 3-colourable", sources.len()),
    )
}

fn linearity() -> Outcome {
    let sizes = [10_000, 20_000, 40_000, 80_000];
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for family in [BenchFamily::CliqueSimplicial, BenchFamily::Biclique] {
        let rows = scaling_table(family, &sizes, 5, 1);
        let ratios = doubling_ratios(&rows);
        let times: Vec<String> = rows
            .iter()
            .map(|r| format!("{}:{:.0}us", r.size(), r.median.as_secs_f64() * 1e6))
            .collect();
        let ratio_text: Vec<String> = ratios.iter().map(|r| format!("{r:.2}")).collect();
        summary.push(format!(
            "{} [{}] ratios [{}]",
            family.name(),
            times.join(" "),
            ratio_text.join(" ")
        ));
        if ratios.iter().any(|&r| r > 2.6) {
            failures.push(family.name().to_string());
        }
    }
    fail_if(failures, summary.join("; "))
}

fn structural_invariants(c: &Corpus) -> Outcome {
    let oracle = Oracle::default();
    let mut failures = Vec::new();
    let mut diamond_free = 0;
    for g in &c.small {
        let tag = emit_graph6(g);
        // simplicial cliques are strong
        for v in simplicial_vertices(g) {
            let mut q = g.neighbors(v).to_vec();
            q.push(v);
            if !oracle.is_strong_clique(g, &q).unwrap().strong {
                failures.push(format!("{tag}: N[{v}] not strong"));
            }
        }
        // CIS graphs have settled P4s
        if oracle.is_cis_bruteforce(g).unwrap().answer && !all_p4_settled(g).answer {
            failures.push(format!("{tag}: CIS with unsettled P4"));
        }
        if !is_diamond_free(g).answer {
            continue;
        }
        diamond_free += 1;
        let set = maximal_cliques_diamond_free(g).unwrap();
        if g.m() >= 1 && set.cliques.len() > g.m() {
            failures.push(format!("{tag}: more cliques than edges"));
        }
        let mut ours: Vec<Vec<usize>> = set.all().collect();
        ours.sort();
        if ours != maximal_cliques(g) {
            failures.push(format!("{tag}: clique family differs from enumeration"));
        }
        for q in &ours {
            for u in (0..g.n()).filter(|u| !q.contains(u)) {
                if q.iter().filter(|&&x| g.has_edge(u, x)).count() > 1 {
                    failures.push(format!("{tag}: {u} has two neighbours in {q:?}"));
                }
            }
        }
        let s = degree_greedy_stable_set(g);
        let edge_simplicial = is_edge_simplicial_bruteforce(g);
        if edge_simplicial {
            let simplicial = simplicial_vertices(g);
            let mut cliques: Vec<Vec<usize>> = simplicial
                .iter()
                .map(|&v| {
                    let mut q = g.neighbors(v).to_vec();
                    q.push(v);
                    q.sort_unstable();
                    q
                })
                .collect();
            cliques.sort();
            cliques.dedup();
            let members = s.sorted_members();
            let hits: Vec<usize> = cliques
                .iter()
                .map(|q| members.iter().filter(|m| q.contains(m)).count())
                .collect();
            if members.iter().any(|m| !simplicial.contains(m)) || hits.iter().any(|&h| h != 1) {
                failures.push(format!(
                    "{tag}: greedy set is not one simplicial vertex per simplicial clique"
                ));
            }
        }
        let companion = companion_multigraph(g, &s.sorted_members()).unwrap();
        if companion.multigraph.has_parallel_edges() && edge_simplicial {
            failures.push(format!("{tag}: duplicate companion edge in an edge simplicial graph"));
        }
    }
    let mut gadgets = 0;
    for g in c.small.iter().filter(|g| validate_class_g(g).answer) {
        for out in [build_g_prime(g).unwrap(), build_g_double_prime(g).unwrap()] {
            gadgets += 1;
            let gg = &out.gadget;
            if !is_diamond_free(gg).answer {
                failures.push(format!("{}: gadget has a diamond", emit_graph6(g)));
            }
            let c = &out.distinguished_clique;
            for u in (0..gg.n()).filter(|u| !c.contains(u)) {
                if c.iter().filter(|&&x| gg.has_edge(u, x)).count() > 1 {
                    failures.push(format!("{}: gadget vertex {u} sees C twice", emit_graph6(g)));
                }
            }
            if !out.pendants.is_empty() {
                for col in out.columns() {
                    if oracle.is_strong_clique(gg, &col).unwrap().strong {
                        failures.push(format!("{}: column {col:?} strong", emit_graph6(g)));
                    }
                }
            }
        }
    }
    fail_if(
        failures,
        format!(
            "{} graphs, {diamond_free} diamond-free, {gadgets} gadgets",
            c.small.len()
        ),
    )
}

fn pattern_dispatch(c: &Corpus) -> Outcome {
    let oracle = Oracle::default();
    let expected: Vec<bool> = c
        .small
        .iter()
        .map(|g| oracle.is_cis_bruteforce(g).unwrap().answer)
        .collect();
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for p in Pattern::FOUR_VERTEX {
        let mut count = 0;
        for (g, &cis) in c.small.iter().zip(&expected) {
            if find_induced(g, p).is_some() {
                continue;
            }
            count += 1;
            match cis_for_f_free(g, p, &oracle) {
                Ok(v) if v.answer == cis && v.verify(g) => {}
                Ok(v) => failures.push(format!("{p} {}: got {}", emit_graph6(g), v.answer)),
                Err(e) => failures.push(format!("{p} {}: {e}", emit_graph6(g))),
            }
        }
        counts.push(format!("{p}:{count}"));
    }
    fail_if(failures, format!("f-free graphs per pattern {}", counts.join(" ")))
}

fn format_fidelity() -> Outcome {
    let mut failures = Vec::new();
    let mut lines = 0;
    for line in common::CORPUS.lines() {
        lines += 1;
        let doc = parse_graph6(line).unwrap();
        if emit_graph6(&doc.graph) != line {
            failures.push(line.to_string());
        }
        let text = emit_edge_list(&GraphDocument::new(doc.graph.clone(), Format::EdgeList), &[]);
        if parse_edge_list(&text).map(|d| d.graph) != Ok(doc.graph.index_sorted()) {
            failures.push(format!("edge list {line}"));
        }
    }
    if lines < 10_000 {
        failures.push(format!("corpus has only {lines} graphs"));
    }
    fail_if(failures, format!("{lines} graphs round-tripped in both formats"))
}

#[test]
fn acceptance() {
    let small = common::small_graphs();
    let corpus = Corpus {
        connected_diamond_free: common::connected_diamond_free_small(),
        random: common::random_diamond_free_corpus(),
        small,
    };
    let criteria: Vec<Criterion> = vec![
        (
            "edge simplicial test matches brute force",
            Box::new(|| algorithm_equivalence(&corpus)),
        ),
        (
            "CIS classifier matches brute force",
            Box::new(|| classifier_equivalence(&corpus)),
        ),
        (
            "alpha * omega >= n on diamond-free CIS graphs",
            Box::new(|| alpha_omega_bound(&corpus)),
        ),
        (
            "gadget statements agree with 3-colourability",
            Box::new(proposition_harness),
        ),
        ("edge simplicial test scales linearly", Box::new(linearity)),
        (
            "structural invariants on the small-graph corpus",
            Box::new(|| structural_invariants(&corpus)),
        ),
        (
            "pattern dispatch matches brute force",
            Box::new(|| pattern_dispatch(&corpus)),
        ),
        ("format round trips", Box::new(format_fidelity)),
    ];
    let mut failed = Vec::new();
    let mut stdout = std::io::stdout().lock();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let (status, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        writeln!(stdout, "[{status}] criterion {}: {name} ({secs:.1}s) - {detail}", i + 1).unwrap();
        if outcome.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
