//! Deterministic DOT and JSON renderings of a graph and its invariants.
//!
//! Output is byte-stable across runs: every collection is emitted in
//! canonical order and no hash-based container is consulted.

use std::fmt::Write;

use crate::error::Error;
use crate::graph::SimpleGraph;
use crate::invariants::{Distance, InvariantReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

pub fn parse_format(text: &str) -> Result<ExportFormat, Error> {
    match text {
        "dot" => Ok(ExportFormat::Dot),
        "json" => Ok(ExportFormat::Json),
        other => Err(Error::UnknownFormat(other.to_string())),
    }
}

pub fn export_graph(g: &SimpleGraph, report: &InvariantReport, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => export_dot(g),
        ExportFormat::Json => export_json(g, report),
    }
}

fn export_dot(g: &SimpleGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", g.kind().tag());
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {};", dot_quote(g.label(v)));
    }
    for (a, b) in g.edges() {
        let _ = writeln!(
            out,
            "  {} -- {};",
            dot_quote(g.label(a)),
            dot_quote(g.label(b))
        );
    }
    out.push_str("}\n");
    out
}

fn dot_quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

pub(crate) fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn json_distance(d: Distance) -> String {
    match d {
        Distance::Finite(v) => v.to_string(),
        Distance::Infinite => "\"inf\"".to_string(),
    }
}

fn json_opt(v: Option<usize>) -> String {
    match v {
        Some(v) => v.to_string(),
        None => "null".to_string(),
    }
}

fn export_json(g: &SimpleGraph, r: &InvariantReport) -> String {
    let vertices = g
        .labels()
        .iter()
        .map(|l| json_string(l))
        .collect::<Vec<_>>()
        .join(", ");
    let edges = g
        .edges()
        .iter()
        .map(|(a, b)| format!("[{a}, {b}]"))
        .collect::<Vec<_>>()
        .join(", ");
    let bipartition = match r.bipartition_sizes {
        Some((a, b)) => format!("[{a}, {b}]"),
        None => "null".to_string(),
    };
    format!(
        "{{\n  \"ring\": {ring},\n  \"graph_kind\": {kind},\n  \"vertices\": [{vertices}],\n  \"edges\": [{edges}],\n  \"invariants\": {{\n    \"vertex_count\": {vertex_count},\n    \"edge_count\": {edge_count},\n    \"connected\": {connected},\n    \"diameter\": {diameter},\n    \"girth\": {girth},\n    \"min_degree\": {min_degree},\n    \"regular_k\": {regular_k},\n    \"empty\": {empty},\n    \"complete\": {complete},\n    \"star\": {star},\n    \"bipartite\": {bipartite},\n    \"complete_bipartite\": {complete_bipartite},\n    \"bipartition\": {bipartition},\n    \"clique_number\": {clique},\n    \"chromatic_number\": {chromatic}\n  }}\n}}\n",
        ring = json_string(g.ring_label()),
        kind = json_string(g.kind().tag()),
        vertex_count = r.vertex_count,
        edge_count = r.edge_count,
        connected = r.is_connected,
        diameter = json_distance(r.diameter),
        girth = json_distance(r.girth),
        min_degree = json_opt(r.min_degree),
        regular_k = json_opt(r.regular_k),
        empty = r.is_empty_graph,
        complete = r.is_complete,
        star = r.is_star,
        bipartite = r.is_bipartite,
        complete_bipartite = r.is_complete_bipartite,
        clique = r.clique_number,
        chromatic = r.chromatic_number,
    )
}
