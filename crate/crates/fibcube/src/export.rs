//! Graph file formats: Graphviz DOT, a plain edge list, and JSON.

use std::fmt::Write as _;

use fibcube_core::CubeGraph;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GraphFormat {
    Dot,
    Edgelist,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub family: String,
    pub p: u32,
    pub r: u32,
    pub n: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

pub fn to_dot(g: &CubeGraph) -> String {
    let c = g.params();
    let mut out = format!("graph \"{}\" {{\n", c);
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.word(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// `order size` on the first line, then one `u v` line per edge with `u < v`,
/// vertices numbered in lexicographic word order.
pub fn to_edgelist(g: &CubeGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_json(g: &CubeGraph) -> GraphJson {
    let c = g.params();
    GraphJson {
        family: c.family.to_string(),
        p: c.p,
        r: c.r,
        n: c.n,
        vertices: (0..g.order()).map(|v| g.word(v).to_string()).collect(),
        edges: g.edges().collect(),
    }
}

pub fn render(g: &CubeGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => to_dot(g),
        GraphFormat::Edgelist => to_edgelist(g),
        GraphFormat::Json => {
            serde_json::to_string_pretty(&to_json(g)).expect("graphs serialize") + "\n"
        }
    }
}

/// Reads an edge list back into `(order, edges)`.
pub fn parse_edgelist(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let bad = |line: usize, what: &str| Error::Usage(format!("edge list line {line}: {what}"));
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| bad(1, "missing header"))?;
    let nums = |s: &str, line: usize| -> Result<Vec<usize>> {
        s.split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(line, "not a number")))
            .collect()
    };
    let head = nums(header, 1)?;
    let [order, size] = head[..] else {
        return Err(bad(1, "expected `order size`"));
    };
    let mut edges = Vec::with_capacity(size);
    for (i, line) in lines {
        let v = nums(line, i + 1)?;
        match v[..] {
            [a, b] if a < order && b < order => edges.push((a, b)),
            _ => return Err(bad(i + 1, "expected `u v` with u, v < order")),
        }
    }
    if edges.len() != size {
        return Err(bad(1, "edge count differs from header"));
    }
    Ok((order, edges))
}
