//! Interchange formats: plain edge lists, graph6 and Graphviz DOT.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graphs::simple::SimpleGraph;

/// Largest vertex count graph6 can encode.
pub const GRAPH6_MAX_VERTICES: usize = 68_719_476_735;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    EdgeList,
    Graph6,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(ExportFormat::EdgeList),
            "graph6" => Ok(ExportFormat::Graph6),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(Error::Format(format!("unsupported export format '{other}'"))),
        }
    }
}

/// Serializes `g` in the requested format. `labels`, when given, annotate DOT
/// nodes; the other formats ignore them.
pub fn export_graph(g: &SimpleGraph, format: ExportFormat, labels: Option<&[String]>) -> Result<Vec<u8>> {
    match format {
        ExportFormat::EdgeList => Ok(to_edge_list(g).into_bytes()),
        ExportFormat::Graph6 => {
            let mut out = to_graph6(g)?;
            out.push(b'\n');
            Ok(out)
        }
        ExportFormat::Dot => to_dot(g, labels).map(String::into_bytes),
    }
}

/// `p <vertices> <edges>` header followed by one `u v` line per edge, `u < v`.
pub fn to_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_dot(g: &SimpleGraph, labels: Option<&[String]>) -> Result<String> {
    if let Some(labels) = labels {
        if labels.len() != g.vertex_count() {
            return Err(Error::LengthMismatch { expected: g.vertex_count(), actual: labels.len() });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match labels {
            Some(labels) => {
                let _ = writeln!(out, "  {v} [label=\"{v} {}\"];", labels[v]);
            }
            None => {
                let _ = writeln!(out, "  {v} [label=\"{v}\"];");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    Ok(out)
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

/// graph6 encoding without the trailing newline.
pub fn to_graph6(g: &SimpleGraph) -> Result<Vec<u8>> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::Format(format!("{n} vertices exceed the graph6 limit")));
    }
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    Ok(out)
}

/// Parses a single graph6 record (optional `>>graph6<<` header and trailing
/// whitespace are accepted).
pub fn parse_graph6(input: &[u8]) -> Result<SimpleGraph> {
    let mut data = input.strip_prefix(b">>graph6<<").unwrap_or(input);
    while let Some((last, rest)) = data.split_last() {
        if last.is_ascii_whitespace() {
            data = rest;
        } else {
            break;
        }
    }
    if data.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(Error::Format("graph6 byte outside 63..=126".into()));
    }
    let sextet = |b: u8| usize::from(b - 63);
    let (n, body) = match data {
        [126, 126, rest @ ..] if rest.len() >= 6 => {
            (rest[..6].iter().fold(0, |acc, &b| (acc << 6) | sextet(b)), &rest[6..])
        }
        [126, rest @ ..] if rest.len() >= 3 => (rest[..3].iter().fold(0, |acc, &b| (acc << 6) | sextet(b)), &rest[3..]),
        [first, rest @ ..] if *first != 126 => (sextet(*first), rest),
        _ => return Err(Error::Format("truncated graph6 size field".into())),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Format(format!("graph6 body has {} bytes, expected {}", body.len(), bits.div_ceil(6))));
    }
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(body[pos / 6]);
            if (byte >> (5 - pos % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    SimpleGraph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::inclusion::build_inclusion_graph;
    use crate::graphs::params::GraphParams;
    use proptest::prelude::*;

    #[test]
    fn edge_list_of_g312() {
        let g = build_inclusion_graph(GraphParams::new(3, 1, 2).unwrap()).unwrap();
        let text = to_edge_list(g.graph());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "p 6 6");
        assert_eq!(lines.len(), 7);
        assert_eq!(lines[1], "0 3");
    }

    #[test]
    fn edgeless_graph_is_header_only() {
        let g = SimpleGraph::from_edges(3, []).unwrap();
        assert_eq!(to_edge_list(&g), "p 3 0\n");
    }

    #[test]
    fn graph6_known_encodings() {
        // Reference strings produced by nauty's geng / networkx.
        let p4 = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&p4).unwrap(), b"Ch");
        let k4 = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4).unwrap(), b"C~");
        let empty = SimpleGraph::from_edges(0, []).unwrap();
        assert_eq!(to_graph6(&empty).unwrap(), b"?");
    }

    #[test]
    fn graph6_large_size_field() {
        let g = SimpleGraph::from_edges(63, [(0, 62)]).unwrap();
        let enc = to_graph6(&g).unwrap();
        assert_eq!(&enc[..4], &[126, 63, 63, 63 + 63]);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_inclusion() {
        let g = build_inclusion_graph(GraphParams::new(6, 2, 3).unwrap()).unwrap();
        let bytes = export_graph(g.graph(), ExportFormat::Graph6, None).unwrap();
        assert_eq!(*bytes.last().unwrap(), b'\n');
        assert_eq!(&parse_graph6(&bytes).unwrap(), g.graph());
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6(b"C").is_err());
        assert!(parse_graph6(b"C\x20").is_err());
    }

    #[test]
    fn dot_output() {
        let g = build_inclusion_graph(GraphParams::new(3, 1, 2).unwrap()).unwrap();
        let dot = to_dot(g.graph(), Some(&g.labels())).unwrap();
        assert!(dot.starts_with("graph G {\n"));
        assert!(dot.contains("  3 [label=\"3 {1,2}\"];"));
        assert!(dot.contains("  0 -- 3;"));
        assert_eq!(dot.matches("--").count(), 6);
    }

    #[test]
    fn format_names() {
        assert_eq!("graph6".parse::<ExportFormat>().unwrap(), ExportFormat::Graph6);
        assert!("gml".parse::<ExportFormat>().is_err());
    }

    proptest! {
        #[test]
        fn graph6_round_trip(n in 0usize..80, seed in proptest::collection::vec(any::<bool>(), 0..3200)) {
            let mut edges = Vec::new();
            let mut it = seed.iter().cycle();
            if !seed.is_empty() {
                for j in 1..n {
                    for i in 0..j {
                        if *it.next().unwrap() {
                            edges.push((i, j));
                        }
                    }
                }
            }
            let g = SimpleGraph::from_edges(n, edges).unwrap();
            prop_assert_eq!(parse_graph6(&to_graph6(&g).unwrap()).unwrap(), g);
        }
    }
}
