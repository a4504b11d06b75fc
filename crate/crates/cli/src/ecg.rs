//! The `.ecg` text format:
//!
//! ```text
//! ecg 1
//! <n> <m>
//! <u> <v> <color>     (m lines, 0 <= u < v < n)
//! ```
//!
//! Colors are arbitrary nonnegative integers and are densified on parse.
//! [`write_ecg`] emits the canonical form: dense colors, edges in
//! lexicographic order, one trailing newline.

use std::collections::HashSet;
use std::fmt::Write as _;

use rainbow_core::graph::{Color, ColoredGraph, GraphError};
use thiserror::Error;

pub const MAGIC: &str = "ecg";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EcgError {
    #[error("line 1: expected header `ecg 1`")]
    BadMagic,
    #[error("line 1: unsupported version `{0}`")]
    BadVersion(String),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("header announces {expected} edges but {found} edge lines follow")]
    CountMismatch { expected: usize, found: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: endpoints must satisfy u < v (got {u} {v})")]
    Unordered { line: usize, u: usize, v: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A parsed document: the graph plus the `(file color, dense color)` pairs
/// in dense order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EcgDocument {
    pub graph: ColoredGraph,
    pub color_map: Vec<(u64, Color)>,
}

fn malformed(line: usize, reason: impl Into<String>) -> EcgError {
    EcgError::Malformed {
        line,
        reason: reason.into(),
    }
}

fn fields<const N: usize>(line: usize, text: &str, what: &str) -> Result<[u64; N], EcgError> {
    let mut out = [0u64; N];
    let mut it = text.split_ascii_whitespace();
    for slot in out.iter_mut() {
        let tok = it
            .next()
            .ok_or_else(|| malformed(line, format!("expected {N} fields ({what})")))?;
        *slot = tok
            .parse()
            .map_err(|_| malformed(line, format!("`{tok}` is not a nonnegative integer")))?;
    }
    if it.next().is_some() {
        return Err(malformed(line, format!("expected {N} fields ({what})")));
    }
    Ok(out)
}

fn to_usize(line: usize, x: u64) -> Result<usize, EcgError> {
    usize::try_from(x).map_err(|_| malformed(line, format!("{x} is too large")))
}

pub fn parse_ecg(text: &str) -> Result<EcgDocument, EcgError> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    let mut head = header.split_ascii_whitespace();
    if head.next() != Some(MAGIC) {
        return Err(EcgError::BadMagic);
    }
    match (head.next(), head.next()) {
        (Some(v), None) if v.parse() == Ok(VERSION) => {}
        (Some(v), None) => return Err(EcgError::BadVersion(v.to_string())),
        _ => return Err(EcgError::BadMagic),
    }

    let counts = lines.next().ok_or_else(|| malformed(2, "missing `n m` line"))?;
    let [n, m] = fields::<2>(2, counts, "n m")?;
    let (n, m) = (to_usize(2, n)?, to_usize(2, m)?);

    let body: Vec<&str> = lines.collect();
    if body.len() != m {
        return Err(EcgError::CountMismatch {
            expected: m,
            found: body.len(),
        });
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (i, text) in body.iter().enumerate() {
        let line = i + 3;
        let [u, v, c] = fields::<3>(line, text, "u v color")?;
        let (u, v) = (to_usize(line, u)?, to_usize(line, v)?);
        if u == v {
            return Err(EcgError::SelfLoop { line, vertex: u });
        }
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EcgError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u > v {
            return Err(EcgError::Unordered { line, u, v });
        }
        if !seen.insert((u, v)) {
            return Err(EcgError::DuplicateEdge { line, u, v });
        }
        edges.push((u, v, c));
    }
    let (graph, color_map) = ColoredGraph::validate_with_map(n, &edges)?;
    Ok(EcgDocument { graph, color_map })
}

pub fn write_ecg(g: &ColoredGraph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.edge_count());
    let _ = writeln!(out, "{MAGIC} {VERSION}");
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v, c) in g.edges() {
        let _ = writeln!(out, "{u} {v} {c}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rainbow_core::constructions::{gen_construction2, gen_rainbow_complete};

    #[test]
    fn densifies_colors() {
        let doc = parse_ecg("ecg 1\n3 3\n0 1 5\n0 2 5\n1 2 9\n").unwrap();
        let g = &doc.graph;
        assert!(g.is_complete());
        assert_eq!([g.color(0, 1), g.color(0, 2), g.color(1, 2)], [Some(0), Some(0), Some(1)]);
        assert_eq!(doc.color_map, vec![(5, 0), (9, 1)]);
    }

    #[test]
    fn self_loop_reports_line() {
        assert_eq!(
            parse_ecg("ecg 1\n2 1\n1 1 0\n"),
            Err(EcgError::SelfLoop { line: 3, vertex: 1 })
        );
    }

    #[test]
    fn rejects_bad_documents() {
        assert_eq!(parse_ecg("ecg1\n1 0\n"), Err(EcgError::BadMagic));
        assert_eq!(parse_ecg(""), Err(EcgError::BadMagic));
        assert_eq!(parse_ecg("ecg 2\n1 0\n"), Err(EcgError::BadVersion("2".into())));
        assert!(matches!(parse_ecg("ecg 1\n"), Err(EcgError::Malformed { line: 2, .. })));
        assert_eq!(
            parse_ecg("ecg 1\n3 2\n0 1 0\n"),
            Err(EcgError::CountMismatch { expected: 2, found: 1 })
        );
        assert!(matches!(parse_ecg("ecg 1\n3 1\n0 1\n"), Err(EcgError::Malformed { line: 3, .. })));
        assert!(matches!(parse_ecg("ecg 1\n3 1\n0 1 -4\n"), Err(EcgError::Malformed { line: 3, .. })));
        assert_eq!(
            parse_ecg("ecg 1\n3 2\n0 1 0\n0 1 1\n"),
            Err(EcgError::DuplicateEdge { line: 4, u: 0, v: 1 })
        );
        assert_eq!(
            parse_ecg("ecg 1\n3 1\n2 1 0\n"),
            Err(EcgError::Unordered { line: 3, u: 2, v: 1 })
        );
        assert_eq!(
            parse_ecg("ecg 1\n3 1\n0 3 0\n"),
            Err(EcgError::VertexOutOfRange { line: 3, vertex: 3, n: 3 })
        );
        assert_eq!(parse_ecg("ecg 1\n0 0\n"), Err(EcgError::Graph(GraphError::NoVertices)));
    }

    #[test]
    fn writes_canonical_text() {
        let g = gen_rainbow_complete(3).unwrap();
        assert_eq!(write_ecg(&g), "ecg 1\n3 3\n0 1 0\n0 2 1\n1 2 2\n");
        let h = parse_ecg(&write_ecg(&gen_construction2(3).unwrap())).unwrap().graph;
        assert_eq!(h.min_color_degree(), 3);
    }

    #[test]
    fn canonical_form_of_a_messy_document() {
        let d = "ecg 1\n4 3\n2 3 70\n0 1 9\n1 2 70\n";
        let g = parse_ecg(d).unwrap().graph;
        assert_eq!(write_ecg(&g), "ecg 1\n4 3\n0 1 0\n1 2 1\n2 3 1\n");
    }
}
