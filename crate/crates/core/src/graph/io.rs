//! Edge-list text format.
//!
//! ```text
//! # comments start with '#', blank lines are ignored
//! n m
//! u v      (exactly m lines, 0 <= u, v < n)
//! ```

use std::io::{BufRead, Write};

use super::{Graph, GraphError};

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| GraphError::Parse { line, msg: format!("missing {what}") })?;
    tok.parse().map_err(|_| GraphError::Parse { line, msg: format!("invalid {what} {tok:?}") })
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let body = line.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let mut toks = body.split_whitespace();
        let a = parse_usize(toks.next(), line_no, "first field")?;
        let b = parse_usize(toks.next(), line_no, "second field")?;
        if let Some(extra) = toks.next() {
            return Err(GraphError::Parse { line: line_no, msg: format!("unexpected token {extra:?}") });
        }
        match header {
            None => header = Some((a, b)),
            Some((_, m)) => {
                if edges.len() == m {
                    return Err(GraphError::EdgeCountMismatch { expected: m, found: m + 1 });
                }
                edges.push((line_no, (a, b)));
            }
        }
    }
    let (n, m) = header.ok_or(GraphError::Parse { line: 1, msg: "missing header \"n m\"".into() })?;
    if edges.len() != m {
        return Err(GraphError::EdgeCountMismatch { expected: m, found: edges.len() });
    }
    Graph::from_numbered_edges(n, edges)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    read_edge_list(text.as_bytes())
}

/// Writes the canonical form: header, then edges in sorted `(min, max)` order.
pub fn write_edge_list<W: Write>(g: &Graph, mut w: W) -> std::io::Result<()> {
    writeln!(w, "{} {}", g.n(), g.m())?;
    for (u, v) in g.edges() {
        writeln!(w, "{u} {v}")?;
    }
    w.flush()
}
