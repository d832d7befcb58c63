//! The game-logic-graph conditions.
//!
//! The simple-path conditions are decided by reachability: a walk can be
//! shortened to a simple path with the same endpoints that uses a subset of
//! its vertices.

use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use crate::graph::{Label, SyntaxGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    Injective,
    Parity,
    Brexit,
    LeavingCycles,
    NoRemain,
    Exit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: Condition,
    /// A witnessing path, or the offending vertices.
    pub path: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Branches {
    pub leave: usize,
    pub remain: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeadRecord {
    pub priority: u32,
    pub head: usize,
    /// The first successor split under which the head passes.
    pub witness: Option<Branches>,
    pub violations: Vec<Violation>,
}

impl HeadRecord {
    pub fn passes(&self) -> bool {
        self.witness.is_some() && self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlgReport {
    pub injective: bool,
    /// Priorities carried by more than one vertex.
    pub shared_priorities: Vec<Violation>,
    pub heads: Vec<HeadRecord>,
}

impl GlgReport {
    pub fn passes(&self) -> bool {
        self.injective && self.heads.iter().all(HeadRecord::passes)
    }

    pub fn head(&self, priority: u32) -> Option<&HeadRecord> {
        self.heads.iter().find(|h| h.priority == priority)
    }

    pub fn violations(&self) -> impl Iterator<Item = &Violation> {
        self.shared_priorities.iter().chain(self.heads.iter().flat_map(|h| &h.violations))
    }
}

/// Checks the five conditions, trying both successor splits at each head.
/// `with_exit` adds the exit condition for the graph's exit letter.
pub fn check_glg(g: &SyntaxGraph, with_exit: bool) -> GlgReport {
    let mut by_priority: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for v in 0..g.len() {
        if let Some(p) = g.priority[v] {
            by_priority.entry(p).or_default().push(v);
        }
    }
    let shared: Vec<Violation> = by_priority
        .values()
        .filter(|vs| vs.len() > 1)
        .map(|vs| Violation { condition: Condition::Injective, path: vs.clone() })
        .collect();
    if !shared.is_empty() {
        return GlgReport { injective: false, shared_priorities: shared, heads: vec![] };
    }
    let exit = if with_exit { g.exit.as_deref() } else { None };
    let heads = by_priority.iter().map(|(&n, vs)| check_head(g, n, vs[0], exit)).collect();
    GlgReport { injective: true, shared_priorities: vec![], heads }
}

fn check_head(g: &SyntaxGraph, n: u32, h: usize, exit: Option<&str>) -> HeadRecord {
    let mut record = HeadRecord { priority: n, head: h, witness: None, violations: vec![] };
    let wanted = if n % 2 == 1 { Label::Or } else { Label::And };
    if g.labels[h] != wanted {
        record.violations.push(Violation { condition: Condition::Parity, path: vec![h] });
    }
    let s = &g.succ[h];
    if s.len() != 2 || s[0] == s[1] {
        record.violations.push(Violation { condition: Condition::Brexit, path: vec![h] });
        return record;
    }
    let mut failures = Vec::new();
    for (leave, remain) in [(s[0], s[1]), (s[1], s[0])] {
        let mut found = Vec::new();
        if let Some(path) = leaving_cycles_violation(g, h, leave) {
            found.push(Violation { condition: Condition::LeavingCycles, path });
        }
        if let Some(path) = no_remain_violation(g, h, remain) {
            found.push(Violation { condition: Condition::NoRemain, path });
        }
        if let Some(e) = exit {
            if let Some(path) = exit_violation(g, h, remain, e) {
                found.push(Violation { condition: Condition::Exit, path });
            }
        }
        if found.is_empty() {
            record.witness = Some(Branches { leave, remain });
            failures.clear();
            break;
        }
        failures.extend(found);
    }
    record.violations.extend(failures);
    record
}

/// A path `leave .. head` whose priorities stay at most `Ω(head)`.
pub fn leaving_cycles_violation(g: &SyntaxGraph, head: usize, leave: usize) -> Option<Vec<usize>> {
    let n = g.priority[head]?;
    let allowed = |v: usize| g.priority[v].is_none_or(|p| p <= n);
    path_within(g, leave, allowed, |v| v == head)
}

/// A simple path `head remain .. h_m` to a head of higher priority.
pub fn no_remain_violation(g: &SyntaxGraph, head: usize, remain: usize) -> Option<Vec<usize>> {
    let n = g.priority[head]?;
    if remain == head {
        return None;
    }
    let higher = |v: usize| g.priority[v].is_some_and(|p| p > n);
    let tail = path_within(g, remain, |v| v != head, higher)?;
    Some(std::iter::once(head).chain(tail).collect())
}

/// A simple path `head remain .. v` with `v` labelled `exit`.
pub fn exit_violation(g: &SyntaxGraph, head: usize, remain: usize, exit: &str) -> Option<Vec<usize>> {
    if remain == head {
        return None;
    }
    let tail = path_within(g, remain, |v| v != head, |v| g.labels[v].is_atom(exit))?;
    Some(std::iter::once(head).chain(tail).collect())
}

/// Shortest path from `start` to a `goal` vertex through `allowed` vertices.
fn path_within(
    g: &SyntaxGraph,
    start: usize,
    allowed: impl Fn(usize) -> bool,
    goal: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    if !allowed(start) {
        return None;
    }
    let mut parent = vec![usize::MAX; g.len()];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if goal(v) {
            let mut path = vec![v];
            let mut u = v;
            while u != start {
                u = parent[u];
                path.push(u);
            }
            path.reverse();
            return Some(path);
        }
        for &t in &g.succ[v] {
            if parent[t] == usize::MAX && allowed(t) {
                parent[t] = v;
                queue.push_back(t);
            }
        }
    }
    None
}
