//! Edge-list text format: first line `n m`, then `m` lines `u v` with
//! `0 ≤ u < v < n`, ASCII decimal, space-separated, newline-terminated.

use revan_core::Graph;
use std::collections::HashSet;
use std::fmt;
use std::io::{self, Write};

/// Parse failure with the 1-based offending line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for EdgeListError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for EdgeListError {}

fn err(line: usize, message: String) -> EdgeListError {
    EdgeListError { line, message }
}

fn parse_fields<const K: usize>(
    line: usize,
    text: &str,
    what: &str,
) -> Result<[u64; K], EdgeListError> {
    let mut out = [0u64; K];
    let mut fields = text.split_whitespace();
    for slot in &mut out {
        let field = fields
            .next()
            .ok_or_else(|| err(line, format!("expected {what}, got `{}`", text.trim_end())))?;
        *slot = field
            .parse()
            .map_err(|_| err(line, format!("`{field}` is not a non-negative integer")))?;
    }
    if fields.next().is_some() {
        return Err(err(line, format!("expected {what}, got extra fields")));
    }
    Ok(out)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines
        .next()
        .ok_or_else(|| err(1, "empty file; expected `n m` header".into()))?;
    let [n, m] = parse_fields(1, header, "header `n m`")?;
    if n == 0 {
        return Err(err(1, "graph must have at least one vertex".into()));
    }
    if n > u32::MAX as u64 {
        return Err(err(1, format!("vertex count {n} exceeds the supported maximum")));
    }

    let mut edges = Vec::with_capacity(m.min(1 << 24) as usize);
    let mut seen = HashSet::with_capacity(edges.capacity());
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or_else(|| err(edges.len() + 2, format!("expected {m} edge lines, found {}", edges.len())))?;
        let [u, v] = parse_fields(lineno, line, "edge `u v`")?;
        if u >= v {
            return Err(err(lineno, format!("edge endpoints must satisfy u < v, got {u} {v}")));
        }
        if v >= n {
            return Err(err(lineno, format!("endpoint {v} out of range for {n} vertices")));
        }
        if !seen.insert((u, v)) {
            return Err(err(lineno, format!("duplicate edge {u} {v}")));
        }
        edges.push((u as u32, v as u32));
    }
    for (lineno, line) in lines {
        if !line.trim().is_empty() {
            return Err(err(lineno, format!("unexpected content after {m} edges")));
        }
    }

    Graph::from_edges(n as usize, edges).map_err(|e| err(1, e.to_string()))
}

pub fn write_edge_list(g: &Graph, mut w: impl Write) -> io::Result<()> {
    writeln!(w, "{} {}", g.vertex_count(), g.edge_count())?;
    for &(u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    Ok(())
}
