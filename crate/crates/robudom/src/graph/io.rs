//! Edge-list text format: `"n m\nu v\n..."` with 0-based vertices and pairs
//! sorted ascending. Used by the CLI for import/export; identical specs
//! serialize byte-identically.

use super::{Graph, GraphError};
use std::fmt::Write as _;

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    g.for_each_edge(|u, v| {
        let _ = writeln!(out, "{u} {v}");
    });
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| GraphError::Parse("missing header line".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse("header must start with vertex count".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| GraphError::Parse("header must contain edge count".into()))?;
    if it.next().is_some() {
        return Err(GraphError::Parse("header has trailing tokens".into()));
    }

    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        let mut it = line.split_whitespace();
        let (u, v) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => {
                let u: usize = a
                    .parse()
                    .map_err(|_| GraphError::Parse(format!("bad vertex on edge line {}", i + 1)))?;
                let v: usize = b
                    .parse()
                    .map_err(|_| GraphError::Parse(format!("bad vertex on edge line {}", i + 1)))?;
                (u, v)
            }
            _ => {
                return Err(GraphError::Parse(format!(
                    "edge line {} must hold exactly two vertices",
                    i + 1
                )))
            }
        };
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Parse(format!(
            "header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges)
}
