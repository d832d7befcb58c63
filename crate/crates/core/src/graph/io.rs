//! Graph JSON and DOT export.
//!
//! ```json
//! {"initial": 0, "exit": "e",
//!  "vertices": [{"id": 0, "label": {"kind": "dia", "game": "g", "dual": false}, "succ": [1]},
//!               {"id": 1, "label": {"kind": "lit", "atom": "e", "neg": false}, "succ": []}]}
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{GraphError, Label, SyntaxGraph};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    initial: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exit: Option<String>,
    vertices: Vec<VertexDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: i64,
    label: Label,
    #[serde(default)]
    succ: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    priority: Option<u32>,
}

/// Reads a graph and rejects arity violations.
pub fn read_graph(bytes: &[u8]) -> Result<SyntaxGraph, GraphError> {
    let (g, ids) = parse(bytes)?;
    for v in 0..g.len() {
        let s = &g.succ[v];
        let distinct = (1..s.len()).all(|i| !s[..i].contains(&s[i]));
        if s.len() != g.labels[v].arity() || !distinct {
            return Err(GraphError::Arity {
                id: ids[v],
                label: g.labels[v].to_string(),
                expected: g.labels[v].arity(),
                found: s.len(),
            });
        }
    }
    Ok(g)
}

/// Reads a graph, leaving arity checks to validation.
pub fn read_graph_unchecked(bytes: &[u8]) -> Result<SyntaxGraph, GraphError> {
    parse(bytes).map(|(g, _)| g)
}

fn parse(bytes: &[u8]) -> Result<(SyntaxGraph, Vec<i64>), GraphError> {
    let doc: GraphDoc = serde_json::from_slice(bytes).map_err(|e| GraphError::Json(e.to_string()))?;
    if doc.vertices.is_empty() {
        return Err(GraphError::Empty);
    }
    let mut index = HashMap::new();
    for (i, v) in doc.vertices.iter().enumerate() {
        if index.insert(v.id, i).is_some() {
            return Err(GraphError::DuplicateId(v.id));
        }
    }
    let lookup = |id: i64| index.get(&id).copied().ok_or(GraphError::UnknownId(id));
    let mut g = SyntaxGraph {
        labels: Vec::with_capacity(doc.vertices.len()),
        succ: Vec::with_capacity(doc.vertices.len()),
        priority: Vec::with_capacity(doc.vertices.len()),
        initial: lookup(doc.initial)?,
        exit: doc.exit,
    };
    let ids = doc.vertices.iter().map(|v| v.id).collect();
    for v in doc.vertices {
        g.succ.push(v.succ.iter().map(|&t| lookup(t)).collect::<Result<_, _>>()?);
        g.labels.push(v.label);
        g.priority.push(v.priority);
    }
    Ok((g, ids))
}

/// Canonical JSON with ids equal to vertex indices.
pub fn write_graph(g: &SyntaxGraph) -> Vec<u8> {
    let doc = GraphDoc {
        initial: g.initial as i64,
        exit: g.exit.clone(),
        vertices: (0..g.len())
            .map(|v| VertexDoc {
                id: v as i64,
                label: g.labels[v].clone(),
                succ: g.succ[v].iter().map(|&t| t as i64).collect(),
                priority: g.priority[v],
            })
            .collect(),
    };
    let mut out = serde_json::to_vec_pretty(&doc).expect("graph documents serialize");
    out.push(b'\n');
    out
}

/// Graphviz rendering: priorities as `_k` suffixes, the initial vertex
/// doubly circled.
pub fn export_dot(g: &SyntaxGraph) -> String {
    let mut out = String::from("digraph G {\n  node [shape=circle];\n");
    for v in 0..g.len() {
        let mut label = g.labels[v].to_string();
        if let Some(p) = g.priority[v] {
            let _ = write!(label, "_{p}");
        }
        let label = label.replace('\\', "\\\\").replace('"', "\\\"");
        let extra = if v == g.initial { ", peripheries=2" } else { "" };
        let _ = writeln!(out, "  v{v} [label=\"{label}\"{extra}];");
    }
    for v in 0..g.len() {
        for &t in &g.succ[v] {
            let _ = writeln!(out, "  v{v} -> v{t};");
        }
    }
    out.push_str("}\n");
    out
}
