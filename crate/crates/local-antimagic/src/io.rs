//! Text and JSON formats for graphs and labelings, plus DOT export.
//!
//! Graph format: `p <vertex_count>` then one `e <u> <v>` line per edge,
//! 1-based, LF line endings; lines starting with `c` are comments. Edges
//! are re-canonicalized on load.
//!
//! Labeling text format: header `labeling <edge_count>`, then one
//! `<u> <v> <label>` record per edge. JSON equivalent:
//! `{"edges": [{"u":..,"v":..,"label":..}, ...]}`. Both are validated for
//! bijectivity when bound to a graph.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::labeling::{weight_vector, EdgeLabeling, LabelingError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("labeling record names edge {{{0}, {1}}} which the graph does not have")]
    UnknownEdge(u32, u32),
    #[error("edge {{{0}, {1}}} appears in more than one record")]
    DuplicateRecord(u32, u32),
    #[error("labeling covers {got} edges but the graph has {expected}")]
    IncompleteCover { got: usize, expected: usize },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

pub fn write_graph_text(graph: &Graph) -> String {
    let mut out = format!("p {}\n", graph.vertex_count());
    for &(a, b) in graph.edges() {
        out.push_str(&format!("e {a} {b}\n"));
    }
    out
}

pub fn read_graph_text(input: &str) -> Result<Graph, FormatError> {
    let mut vertex_count: Option<u32> = None;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("p") => {
                if vertex_count.is_some() {
                    return Err(parse_err(lineno, "second p line"));
                }
                let n: u32 = parts
                    .next()
                    .ok_or_else(|| parse_err(lineno, "p line needs a vertex count"))?
                    .parse()
                    .map_err(|e| parse_err(lineno, format!("bad vertex count: {e}")))?;
                vertex_count = Some(n);
            }
            Some("e") => {
                if vertex_count.is_none() {
                    return Err(parse_err(lineno, "e line before p line"));
                }
                let mut field = || -> Result<u32, FormatError> {
                    parts
                        .next()
                        .ok_or_else(|| parse_err(lineno, "e line needs two endpoints"))?
                        .parse()
                        .map_err(|e| parse_err(lineno, format!("bad endpoint: {e}")))
                };
                let u = field()?;
                let v = field()?;
                edges.push((u, v));
            }
            Some(other) => return Err(parse_err(lineno, format!("unknown directive {other:?}"))),
            None => unreachable!(),
        }
    }
    let vertex_count = vertex_count.ok_or_else(|| parse_err(0, "missing p line"))?;
    Ok(Graph::new(vertex_count, edges)?)
}

/// One edge record of a labeling file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingRecord {
    pub u: u32,
    pub v: u32,
    pub label: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct LabelingJson {
    edges: Vec<LabelingRecord>,
}

pub fn labeling_records(graph: &Graph, labeling: &EdgeLabeling) -> Vec<LabelingRecord> {
    graph
        .edges()
        .iter()
        .enumerate()
        .map(|(idx, &(u, v))| LabelingRecord { u, v, label: labeling.label(idx) })
        .collect()
}

pub fn write_labeling_text(graph: &Graph, labeling: &EdgeLabeling) -> String {
    let mut out = format!("labeling {}\n", graph.edge_count());
    for r in labeling_records(graph, labeling) {
        out.push_str(&format!("{} {} {}\n", r.u, r.v, r.label));
    }
    out
}

pub fn read_labeling_text(input: &str) -> Result<Vec<LabelingRecord>, FormatError> {
    let mut lines = input.lines().enumerate();
    let (_, header) = lines
        .by_ref()
        .find(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('c'))
        .ok_or_else(|| parse_err(0, "empty labeling file"))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("labeling") {
        return Err(parse_err(1, "expected `labeling <edge_count>` header"));
    }
    let declared: usize = parts
        .next()
        .ok_or_else(|| parse_err(1, "header needs an edge count"))?
        .parse()
        .map_err(|e| parse_err(1, format!("bad edge count: {e}")))?;

    let mut records = Vec::new();
    for (idx, raw) in lines {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(parse_err(lineno, "expected `<u> <v> <label>`"));
        }
        let u = fields[0].parse().map_err(|e| parse_err(lineno, format!("bad u: {e}")))?;
        let v = fields[1].parse().map_err(|e| parse_err(lineno, format!("bad v: {e}")))?;
        let label = fields[2].parse().map_err(|e| parse_err(lineno, format!("bad label: {e}")))?;
        records.push(LabelingRecord { u, v, label });
    }
    if records.len() != declared {
        return Err(parse_err(0, format!("header declares {declared} edges, found {}", records.len())));
    }
    Ok(records)
}

pub fn write_labeling_json(graph: &Graph, labeling: &EdgeLabeling) -> String {
    let doc = LabelingJson { edges: labeling_records(graph, labeling) };
    serde_json::to_string_pretty(&doc).expect("labeling records always serialize")
}

pub fn read_labeling_json(input: &str) -> Result<Vec<LabelingRecord>, FormatError> {
    let doc: LabelingJson = serde_json::from_str(input)?;
    Ok(doc.edges)
}

/// Matches records to the graph's canonical edge indices and validates the
/// result is a bijection covering every edge.
pub fn bind_labeling(graph: &Graph, records: &[LabelingRecord]) -> Result<EdgeLabeling, FormatError> {
    if records.len() != graph.edge_count() {
        return Err(FormatError::IncompleteCover {
            got: records.len(),
            expected: graph.edge_count(),
        });
    }
    let mut labels = vec![0u64; graph.edge_count()];
    let mut seen = vec![false; graph.edge_count()];
    for r in records {
        let key = (r.u.min(r.v), r.u.max(r.v));
        let idx = graph
            .edges()
            .binary_search(&key)
            .map_err(|_| FormatError::UnknownEdge(r.u, r.v))?;
        if seen[idx] {
            return Err(FormatError::DuplicateRecord(key.0, key.1));
        }
        seen[idx] = true;
        labels[idx] = r.label;
    }
    Ok(EdgeLabeling::for_graph(graph, labels)?)
}

/// DOT rendering with labels on edges and, when requested, weights on
/// vertices. Output order is deterministic (canonical edge order).
pub fn export_dot(graph: &Graph, labeling: Option<&EdgeLabeling>) -> Result<String, FormatError> {
    let weights = match labeling {
        Some(f) => Some(weight_vector(graph, f)?),
        None => None,
    };
    let mut out = String::from("graph {\n");
    for u in graph.vertices() {
        match &weights {
            Some(w) => out.push_str(&format!("  v{u} [label=\"{}\"];\n", w.get(u))),
            None => out.push_str(&format!("  v{u};\n")),
        }
    }
    for (idx, &(a, b)) in graph.edges().iter().enumerate() {
        match labeling {
            Some(f) => out.push_str(&format!("  v{a} -- v{b} [label=\"{}\"];\n", f.label(idx))),
            None => out.push_str(&format!("  v{a} -- v{b};\n")),
        }
    }
    out.push_str("}\n");
    Ok(out)
}
