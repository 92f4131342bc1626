//! Edge-list and graph6 reading and writing.
//!
//! Edge lists start with a header line `n <count>`, followed by one edge
//! `u v` per line. Endpoints are either all integers in `0..count`, or, if
//! any token in the file is not an integer, names that receive indices in
//! order of first appearance. A line with a single token declares a vertex
//! without adding an edge. `#` starts a comment.
//!
//! graph6 follows the usual encoding: a size header, then the upper
//! triangle column by column, six bits per byte, each byte offset by 63.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "edges" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            _ => Err(Error::BadParams(format!(
                "unknown format '{s}' (expected edgelist or graph6)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    /// External labels; `names[i]` belongs to vertex `i`.
    pub names: Option<Vec<String>>,
    pub source_format: Format,
}

impl GraphDocument {
    pub fn new(graph: Graph, source_format: Format) -> Self {
        Self {
            graph,
            names: None,
            source_format,
        }
    }

    /// External label of `v`, or its index.
    pub fn label(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::EdgeList => emit_edge_list(self, &[]),
            Format::Graph6 => emit_graph6(&self.graph) + "\n",
        }
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn at_line(line: usize, source: Error) -> Error {
    Error::AtLine {
        line,
        source: Box::new(source),
    }
}

pub fn parse_edge_list(text: &str) -> Result<GraphDocument> {
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| {
            (
                i + 1,
                l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>(),
            )
        })
        .filter(|(_, tokens)| !tokens.is_empty())
        .collect();
    let Some(((header_line, header), body)) = lines.split_first() else {
        return Err(parse_error(1, "missing header 'n <count>'"));
    };
    let n: usize = match header.as_slice() {
        ["n", count] => count
            .parse()
            .map_err(|_| parse_error(*header_line, format!("bad vertex count '{count}'")))?,
        _ => return Err(parse_error(*header_line, "expected header 'n <count>'")),
    };
    for (line, tokens) in body {
        if tokens.len() > 2 {
            return Err(parse_error(*line, "expected 'u v' or a single vertex"));
        }
    }
    let symbolic = body
        .iter()
        .flat_map(|(_, t)| t.iter())
        .any(|t| t.parse::<usize>().is_err());

    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut edges = Vec::new();
    for (line, tokens) in body {
        let mut ends = Vec::with_capacity(2);
        for &t in tokens {
            let v = if symbolic {
                *index.entry(t).or_insert_with(|| {
                    names.push(t.to_string());
                    names.len() - 1
                })
            } else {
                t.parse().expect("numeric mode")
            };
            if v >= n {
                return Err(at_line(*line, Error::IndexOutOfRange { vertex: v, n }));
            }
            ends.push(v);
        }
        if let [u, v] = ends[..] {
            if u == v {
                return Err(at_line(*line, Error::SelfLoop { vertex: u }));
            }
            edges.push((u, v));
        }
    }
    if symbolic && names.len() != n {
        return Err(parse_error(
            *header_line,
            format!("header declares {n} vertices but {} names appear", names.len()),
        ));
    }
    Ok(GraphDocument {
        graph: Graph::new(n, edges)?,
        names: symbolic.then_some(names),
        source_format: Format::EdgeList,
    })
}

/// Edge list with `comments` as leading `#` lines. Named vertices are
/// declared one per line before the edges so indices survive a round trip.
pub fn emit_edge_list(doc: &GraphDocument, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    out.push_str(&format!("n {}\n", doc.graph.n()));
    if let Some(names) = &doc.names {
        for name in names {
            out.push_str(name);
            out.push('\n');
        }
    }
    for (u, v) in doc.graph.edges() {
        out.push_str(&format!("{} {}\n", doc.label(u), doc.label(v)));
    }
    out
}

const HEADER: &str = ">>graph6<<";

fn size_bytes(n: usize) -> Vec<u8> {
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        let mut v = vec![126];
        v.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        v
    } else {
        let mut v = vec![126, 126];
        v.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
        v
    }
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes = size_bytes(n);
    let g = g.index_sorted();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).expect("graph6 bytes are printable ASCII")
}

fn decode_line(line: &str, line_no: usize) -> Result<Graph> {
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(parse_error(line_no, "empty graph6 line"));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_error(
            line_no,
            format!("byte {} at offset {pos} is outside 63..=126", bytes[pos]),
        ));
    }
    let digits = |from: usize, count: usize| -> Result<usize> {
        let chunk = bytes
            .get(from..from + count)
            .ok_or_else(|| parse_error(line_no, "truncated size header"))?;
        Ok(chunk.iter().fold(0, |acc, &b| acc << 6 | (b - 63) as usize))
    };
    let (n, start) = match bytes {
        [126, 126, ..] => (digits(2, 6)?, 8),
        [126, ..] => (digits(1, 3)?, 4),
        [b, ..] => ((b - 63) as usize, 1),
        [] => unreachable!(),
    };
    if size_bytes(n).len() != start {
        return Err(parse_error(line_no, "non-canonical size header"));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[start..];
    if body.len() != expected {
        return Err(parse_error(
            line_no,
            format!("expected {expected} data bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(parse_error(line_no, "non-zero padding bits"));
    }
    let mut lists = vec![Vec::new(); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                lists[i].push(j);
                lists[j].push(i);
            }
            k += 1;
        }
    }
    for l in &mut lists {
        l.sort_unstable();
    }
    Ok(Graph::from_sorted_lists(lists))
}

/// Every graph in a graph6 file, one per line. A final newline is allowed;
/// blank lines are not.
pub fn parse_graph6_all(text: &str) -> Result<Vec<Graph>> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    text.split('\n')
        .enumerate()
        .map(|(i, l)| decode_line(l.strip_suffix('\r').unwrap_or(l), i + 1))
        .collect()
}

/// The first graph of a graph6 file.
pub fn parse_graph6(text: &str) -> Result<GraphDocument> {
    let first = text.split('\n').next().unwrap_or("");
    let graph = decode_line(first.strip_suffix('\r').unwrap_or(first), 1)?;
    Ok(GraphDocument::new(graph, Format::Graph6))
}

/// graph6 when the first meaningful line is a single whitespace-free token
/// other than a comment, edge list otherwise.
pub fn detect_format(text: &str) -> Format {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.starts_with(HEADER) || (!first.starts_with('#') && !first.trim().contains(char::is_whitespace)) {
        Format::Graph6
    } else {
        Format::EdgeList
    }
}

pub fn parse_auto(text: &str) -> Result<GraphDocument> {
    match detect_format(text) {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_basics() {
        let doc = parse_edge_list("n 3\n0 1\n1 2").unwrap();
        assert_eq!(doc.graph, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(doc.names, None);
    }

    #[test]
    fn self_loop_reported_at_its_line() {
        match parse_edge_list("n 2\n0 0") {
            Err(Error::AtLine { line: 2, source }) => assert_eq!(*source, Error::SelfLoop { vertex: 0 }),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn symbolic_names() {
        let doc = parse_edge_list("n 4\na b\nb c\nc d\nd a").unwrap();
        assert_eq!(doc.graph, Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap());
        assert_eq!(doc.names.as_deref(), Some(&["a", "b", "c", "d"].map(String::from)[..]));
        let again = parse_edge_list(&emit_edge_list(&doc, &[])).unwrap();
        assert_eq!(again, doc);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("# c\n3\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(
            parse_edge_list("n 2\n0 1 2"),
            Err(Error::Parse { line: 2, .. })
        ));
        match parse_edge_list("n 2\n0 5") {
            Err(Error::AtLine { line: 2, source }) => {
                assert_eq!(*source, Error::IndexOutOfRange { vertex: 5, n: 2 })
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_edge_list("n 3\na b"), Err(Error::Parse { .. })));
    }

    #[test]
    fn comments_and_isolated_vertices() {
        let doc = parse_edge_list("# header\nn 4 # four\n0 1\n\n3\n").unwrap();
        assert_eq!(doc.graph.m(), 1);
        assert_eq!(doc.graph.n(), 4);
    }

    #[test]
    fn graph6_known_strings() {
        let k2 = parse_graph6("A_").unwrap().graph;
        assert_eq!(k2, Graph::complete(2));
        let star = parse_graph6("D?{").unwrap().graph;
        assert_eq!(star, Graph::new(5, (0..4).map(|i| (i, 4))).unwrap());
        assert_eq!(emit_graph6(&star), "D?{");
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap().graph, k2);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("D?"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("A "), Err(Error::Parse { .. })));
        // 'A' + 0b100001: padding bit set
        assert!(matches!(parse_graph6("A`"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph6_all("A_\n\nA_\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn graph6_large_header() {
        let g = Graph::new(100, (1..100).map(|i| (i - 1, i))).unwrap();
        let s = emit_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap().graph, g);
    }

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("n 3\n0 1\n"), Format::EdgeList);
        assert_eq!(detect_format("# c\nn 3\n"), Format::EdgeList);
        assert_eq!(detect_format("D?{\n"), Format::Graph6);
    }
}
