//! Edge-list text format and DOT export.
//!
//! The text format is line oriented:
//!
//! ```text
//! # comment
//! 3            <- vertex count, optionally followed by the token `loops`
//! 0 1
//! 0 2
//! 1 2
//! ```
//!
//! Everything after `#` on a line is ignored, as are blank lines. The
//! serializer writes each edge as `u v` with `u <= v` in lexicographic order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn serialize(g: &Graph) -> String {
    let mut out = String::new();
    if g.allows_loops() {
        let _ = writeln!(out, "{} loops", g.vertex_count());
    } else {
        let _ = writeln!(out, "{}", g.vertex_count());
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing header".into(),
    })?;
    let mut tokens = header.split_whitespace();
    let n: usize = tokens
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Parse {
            line: header_line,
            message: format!("bad vertex count in header {header:?}"),
        })?;
    let allow_loops = match (tokens.next(), tokens.next()) {
        (None, _) => false,
        (Some("loops"), None) => true,
        _ => {
            return Err(Error::Parse {
                line: header_line,
                message: format!("malformed header {header:?}"),
            })
        }
    };

    let mut edges = Vec::new();
    for (line, content) in lines {
        let parsed: Vec<usize> = content
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("bad token {t:?}"),
                })
            })
            .collect::<Result<_>>()?;
        match parsed.as_slice() {
            &[u, v] => edges.push((u, v)),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected two vertex ids, got {content:?}"),
                })
            }
        }
    }
    Graph::from_edge_list(n, &edges, allow_loops)
}

/// Undirected DOT; loops are written as self-edges.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for u in 0..g.vertex_count() {
        let _ = writeln!(out, "  {u};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}
