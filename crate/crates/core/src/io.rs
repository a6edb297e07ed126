//! Edge-list text format.
//!
//! ```text
//! # vertices 4
//! w 0 2.5 1
//! 0 1
//! 1 2
//! ```
//!
//! Lines starting with `#` are comments. The writer emits a
//! `# vertices N` comment, which the reader honors so that isolated
//! trailing vertices survive a round trip; otherwise the vertex count is
//! one more than the largest id mentioned. Optional `w u cost value` lines
//! must precede the edges; vertices without one get weight 1.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_id(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("bad vertex id {tok:?}") })
}

fn parse_weight(tok: &str, line: usize) -> Result<f64> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("bad weight {tok:?}") })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared = 0usize;
    let mut max_id: Option<usize> = None;
    let mut weights: Vec<(usize, f64, f64)> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let mut toks = comment.split_whitespace();
            if toks.next() == Some("vertices") {
                if let Some(Ok(n)) = toks.next().map(str::parse::<usize>) {
                    declared = n;
                }
            }
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match toks.as_slice() {
            ["w", u, c, v] => {
                if !edges.is_empty() {
                    return Err(Error::Parse { line, msg: "weight line after edges".into() });
                }
                let u = parse_id(u, line)?;
                max_id = max_id.max(Some(u));
                weights.push((u, parse_weight(c, line)?, parse_weight(v, line)?));
            }
            [u, v] => {
                let (u, v) = (parse_id(u, line)?, parse_id(v, line)?);
                max_id = max_id.max(Some(u.max(v)));
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse { line, msg: format!("unrecognized line {trimmed:?}") })
            }
        }
    }
    let n = declared.max(max_id.map_or(0, |m| m + 1));
    if n == 0 {
        return Err(Error::Parse { line: 0, msg: "no vertices".into() });
    }
    if weights.is_empty() {
        return Graph::new(n, &edges);
    }
    let mut costs = vec![1.0; n];
    let mut values = vec![1.0; n];
    for (u, c, v) in weights {
        costs[u] = c;
        values[u] = v;
    }
    Graph::with_weights(n, &edges, Some(costs), Some(values))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# vertices {}", g.n());
    let _ = writeln!(out, "# edges {}", g.m());
    if !g.has_unit_weights() {
        for v in 0..g.n() {
            let _ = writeln!(out, "w {v} {} {}", g.costs()[v], g.values()[v]);
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
