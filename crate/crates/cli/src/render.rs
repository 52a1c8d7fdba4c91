use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::json;
use wreathlab::{format, Graph, RhoMatrix, WreathCodec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// Edge-list text (0-based, re-readable with file:PATH)
    Edgelist,
    Dot,
    Json,
    /// Human-readable, 1-based labels
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Table,
    Json,
    Csv,
    /// key=value lines
    Text,
}

/// Vertex names shown to users.
pub enum Labels {
    Plain,
    Wreath(WreathCodec),
}

impl Labels {
    pub fn name(&self, v: usize) -> String {
        match self {
            Labels::Plain => (v + 1).to_string(),
            Labels::Wreath(codec) => {
                let w = codec.decode(v);
                let config: Vec<String> = w.config.iter().map(|y| (y + 1).to_string()).collect();
                format!("({})x{}", config.join(","), w.position + 1)
            }
        }
    }
}

pub fn graph(g: &Graph, fmt: GraphFormat, name: &str, labels: &Labels) -> String {
    match fmt {
        GraphFormat::Edgelist => format::serialize(g),
        GraphFormat::Dot => format::to_dot(g, name),
        GraphFormat::Json => {
            let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
            let doc = json!({
                "name": name,
                "vertices": g.vertex_count(),
                "loops_allowed": g.allows_loops(),
                "components": g.component_count(),
                "edges": edges,
            });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        GraphFormat::Table => {
            let mut out = format!(
                "{name}: {} vertices, {} edges, {} components\n",
                g.vertex_count(),
                g.edge_count(),
                g.component_count()
            );
            for (u, v) in g.edges() {
                let _ = writeln!(out, "{} -- {}", labels.name(u), labels.name(v));
            }
            out
        }
    }
}

pub fn rho_matrix(matrix: &RhoMatrix, set: &[usize], fmt: TableFormat, spec: &str) -> String {
    let n = matrix.size();
    let labels: Vec<usize> = set.iter().map(|v| v + 1).collect();
    match fmt {
        TableFormat::Json => {
            let doc = json!({ "graph": spec, "set": labels, "matrix": matrix.rows() });
            serde_json::to_string_pretty(&doc).expect("json") + "\n"
        }
        TableFormat::Csv => {
            let mut out = String::new();
            for u in 0..n {
                let row: Vec<String> = matrix.row(u).iter().map(u32::to_string).collect();
                let _ = writeln!(out, "{}", row.join(","));
            }
            out
        }
        TableFormat::Text => {
            let mut out = String::new();
            for u in 0..n {
                for v in 0..n {
                    let _ = writeln!(out, "u={} v={} rho={}", u + 1, v + 1, matrix.get(u, v));
                }
            }
            out
        }
        TableFormat::Table => {
            let width = matrix
                .rows()
                .iter()
                .flatten()
                .map(|x| x.to_string().len())
                .chain([n.to_string().len()])
                .max()
                .unwrap_or(1);
            let set_text: Vec<String> = labels.iter().map(usize::to_string).collect();
            let mut out = format!("rho_A on {spec}, A = {{{}}}\n", set_text.join(","));
            let header: Vec<String> = (1..=n).map(|v| format!("{v:>width$}")).collect();
            let _ = writeln!(out, "{:>width$} | {}", "", header.join(" "));
            let _ = writeln!(out, "{}", "-".repeat(width + 3 + n * (width + 1) - 1));
            for u in 0..n {
                let row: Vec<String> = matrix
                    .row(u)
                    .iter()
                    .map(|x| format!("{x:>width$}"))
                    .collect();
                let _ = writeln!(out, "{:>width$} | {}", u + 1, row.join(" "));
            }
            out
        }
    }
}
