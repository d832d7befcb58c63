//! Syntax graphs: formulas with sharing and cycles, evaluated by an
//! acceptance game.

mod accept;
mod io;
mod validate;

pub use accept::{accepts, build_acceptance_arena, AcceptanceArena, AcceptancePosition};
pub use io::{export_dot, read_graph, read_graph_unchecked, write_graph};
pub use validate::{validate_graph, ArityFault, ValidationReport};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Label {
    Lit {
        atom: String,
        #[serde(default)]
        neg: bool,
    },
    And,
    Or,
    Dia {
        game: String,
        #[serde(default)]
        dual: bool,
    },
}

impl Label {
    pub fn lit(atom: impl Into<String>) -> Self {
        Label::Lit { atom: atom.into(), neg: false }
    }

    pub fn neg_lit(atom: impl Into<String>) -> Self {
        Label::Lit { atom: atom.into(), neg: true }
    }

    pub fn dia(game: impl Into<String>, dual: bool) -> Self {
        Label::Dia { game: game.into(), dual }
    }

    pub fn arity(&self) -> usize {
        match self {
            Label::Lit { .. } => 0,
            Label::Dia { .. } => 1,
            Label::And | Label::Or => 2,
        }
    }

    /// The positive literal `atom`.
    pub fn is_atom(&self, name: &str) -> bool {
        matches!(self, Label::Lit { atom, neg: false } if atom == name)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Lit { atom, neg: false } => write!(f, "{atom}"),
            Label::Lit { atom, neg: true } => write!(f, "¬{atom}"),
            Label::And => f.write_str("∧"),
            Label::Or => f.write_str("∨"),
            Label::Dia { game, dual: false } => write!(f, "⟨{game}⟩"),
            Label::Dia { game, dual: true } => write!(f, "⟨{game}^d⟩"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("duplicate vertex id {0}")]
    DuplicateId(i64),
    #[error("unknown vertex id {0}")]
    UnknownId(i64),
    #[error("vertex {id}: label `{label}` needs {expected} distinct successors, found {found}")]
    Arity { id: i64, label: String, expected: usize, found: usize },
    #[error("vertex {0} out of range")]
    NoSuchVertex(usize),
    #[error("{from} -> {to} is not an edge")]
    NotAPath { from: usize, to: usize },
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

/// A pointed syntax graph, optionally with an exit letter.
///
/// Vertices are `0..len()`. Successor lists are ordered for output but
/// carry set semantics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxGraph {
    pub labels: Vec<Label>,
    pub succ: Vec<Vec<usize>>,
    pub priority: Vec<Option<u32>>,
    pub initial: usize,
    pub exit: Option<String>,
}

impl SyntaxGraph {
    /// A graph with the single vertex `label`.
    pub fn single(label: Label) -> Self {
        SyntaxGraph { labels: vec![label], succ: vec![vec![]], priority: vec![None], initial: 0, exit: None }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn add_vertex(&mut self, label: Label, succ: Vec<usize>, priority: Option<u32>) -> usize {
        self.labels.push(label);
        self.succ.push(succ);
        self.priority.push(priority);
        self.labels.len() - 1
    }

    pub fn with_exit(mut self, exit: Option<String>) -> Self {
        self.exit = exit;
        self
    }

    pub fn max_priority(&self) -> Option<u32> {
        self.priority.iter().flatten().copied().max()
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        self.labels
            .iter()
            .filter_map(|l| match l {
                Label::Lit { atom, .. } => Some(atom.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn games(&self) -> BTreeSet<String> {
        self.labels
            .iter()
            .filter_map(|l| match l {
                Label::Dia { game, .. } => Some(game.clone()),
                _ => None,
            })
            .collect()
    }

    /// Vertices reachable from `from`, by breadth-first search.
    pub fn reachable(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(v) = queue.pop_front() {
            for &t in &self.succ[v] {
                if !std::mem::replace(&mut seen[t], true) {
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Vertices labelled with the exit letter.
    pub fn exit_vertices(&self) -> Vec<usize> {
        match &self.exit {
            Some(e) => (0..self.len()).filter(|&v| self.labels[v].is_atom(e)).collect(),
            None => vec![],
        }
    }
}

/// The subgraph of vertices reachable from `v`, kept in their original
/// order, pointed at `v`. Also returns the original index of every kept
/// vertex.
pub fn generated_subgraph(g: &SyntaxGraph, v: usize) -> Result<(SyntaxGraph, Vec<usize>), GraphError> {
    if v >= g.len() {
        return Err(GraphError::NoSuchVertex(v));
    }
    let keep = g.reachable(v);
    let old: Vec<usize> = (0..g.len()).filter(|&u| keep[u]).collect();
    let mut new_index = vec![usize::MAX; g.len()];
    for (i, &u) in old.iter().enumerate() {
        new_index[u] = i;
    }
    let sub = SyntaxGraph {
        labels: old.iter().map(|&u| g.labels[u].clone()).collect(),
        succ: old.iter().map(|&u| g.succ[u].iter().map(|&t| new_index[t]).collect()).collect(),
        priority: old.iter().map(|&u| g.priority[u]).collect(),
        initial: new_index[v],
        exit: g.exit.clone(),
    };
    Ok((sub, old))
}

/// Largest priority on `path`, or -1 if no vertex on it has one.
pub fn path_priority(g: &SyntaxGraph, path: &[usize]) -> Result<i64, GraphError> {
    if let Some(&bad) = path.iter().find(|&&v| v >= g.len()) {
        return Err(GraphError::NoSuchVertex(bad));
    }
    for w in path.windows(2) {
        if !g.succ[w[0]].contains(&w[1]) {
            return Err(GraphError::NotAPath { from: w[0], to: w[1] });
        }
    }
    Ok(path.iter().filter_map(|&v| g.priority[v]).map(i64::from).max().unwrap_or(-1))
}
