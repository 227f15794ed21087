//! Plain-text edge lists.
//!
//! The strict format: the first non-comment line holds the vertex count,
//! every following non-comment line holds one edge `u v` with 0-based
//! endpoints. Lines starting with `#` are comments and blank lines are
//! skipped. Duplicate edges, loops and out-of-range endpoints are errors.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("input has no vertex-count line")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_fields(line: usize, l: &str) -> Result<(&str, &str), ParseError> {
    let mut it = l.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(ParseError::Syntax {
            line,
            message: format!("expected two endpoints, found {l:?}"),
        }),
    }
}

fn parse_index(line: usize, tok: &str) -> Result<usize, ParseError> {
    tok.parse().map_err(|_| ParseError::Syntax {
        line,
        message: format!("{tok:?} is not a non-negative integer"),
    })
}

/// Parses the strict numeric format.
pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let order = parse_index(header_line, header)?;
    if order == 0 {
        return Err(ParseError::Graph {
            line: header_line,
            source: GraphError::Empty,
        });
    }
    let mut seen = HashMap::new();
    let mut edges = Vec::new();
    for (line, l) in lines {
        let (a, b) = two_fields(line, l)?;
        let (u, v) = (parse_index(line, a)?, parse_index(line, b)?);
        check_edge(line, order, u, v, &mut seen)?;
        edges.push((u, v));
    }
    Ok(Graph::new(order, edges).expect("edges validated while parsing"))
}

fn check_edge(
    line: usize,
    order: usize,
    u: Vertex,
    v: Vertex,
    seen: &mut HashMap<(Vertex, Vertex), usize>,
) -> Result<(), ParseError> {
    let err = |source| ParseError::Graph { line, source };
    if u >= order || v >= order {
        return Err(err(GraphError::EdgeOutOfRange { u, v, order }));
    }
    if u == v {
        return Err(err(GraphError::SelfLoop(u)));
    }
    if seen.insert((u.min(v), u.max(v)), line).is_some() {
        return Err(err(GraphError::DuplicateEdge(u.min(v), u.max(v))));
    }
    Ok(())
}

/// Parses an edge list with arbitrary whitespace-free labels and no count
/// line. Labels become dense ids in first-seen order; the label table is
/// returned alongside the graph.
pub fn parse_labeled(text: &str) -> Result<(Graph, Vec<String>), ParseError> {
    let mut ids: HashMap<&str, Vertex> = HashMap::new();
    let mut labels = Vec::new();
    let mut raw = Vec::new();
    for (line, l) in content_lines(text) {
        let (a, b) = two_fields(line, l)?;
        let mut id = |tok| {
            *ids.entry(tok).or_insert_with(|| {
                labels.push(tok.to_string());
                labels.len() - 1
            })
        };
        let (u, v) = (id(a), id(b));
        raw.push((line, u, v));
    }
    if labels.is_empty() {
        return Err(ParseError::MissingHeader);
    }
    let mut seen = HashMap::new();
    for &(line, u, v) in &raw {
        check_edge(line, labels.len(), u, v, &mut seen)?;
    }
    let g = Graph::new(labels.len(), raw.into_iter().map(|(_, u, v)| (u, v)))
        .expect("edges validated while parsing");
    Ok((g, labels))
}

/// Serializes `g` in the strict format, preceded by `# `-prefixed header lines.
pub fn write(g: &Graph, header: &[String]) -> String {
    let mut out = String::new();
    for h in header {
        let _ = writeln!(out, "# {h}");
    }
    let _ = writeln!(out, "{}", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
