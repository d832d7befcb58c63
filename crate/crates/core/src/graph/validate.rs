use serde::Serialize;

use super::{Label, SyntaxGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArityFault {
    pub vertex: usize,
    pub expected: usize,
    pub found: usize,
    /// Successors are out of range or repeated.
    pub malformed: bool,
}

/// Outcome of the structural checks on a syntax graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub initial_in_range: bool,
    pub arity: Vec<ArityFault>,
    /// A cycle avoiding every vertex with a priority.
    pub unprioritized_cycle: Option<Vec<usize>>,
    /// With an exit `e`: whether some vertex is labelled `e`.
    pub exit_present: bool,
    /// With an exit `e`: vertices labelled `¬e`.
    pub negated_exit: Vec<usize>,
}

impl ValidationReport {
    pub fn arity_ok(&self) -> bool {
        self.arity.is_empty()
    }

    pub fn priority_ok(&self) -> bool {
        self.unprioritized_cycle.is_none()
    }

    pub fn exit_ok(&self) -> bool {
        self.exit_present && self.negated_exit.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.initial_in_range && self.arity_ok() && self.priority_ok() && self.exit_ok()
    }
}

/// Checks arities, the priority condition and exit labelling.
///
/// Every simple cycle has a prioritized vertex iff the vertices without a
/// priority induce an acyclic subgraph.
pub fn validate_graph(g: &SyntaxGraph) -> ValidationReport {
    let n = g.len();
    let mut report = ValidationReport { initial_in_range: g.initial < n, ..Default::default() };
    for v in 0..n {
        let s = &g.succ[v];
        let expected = g.labels[v].arity();
        let malformed = s.iter().any(|&t| t >= n) || (1..s.len()).any(|i| s[..i].contains(&s[i]));
        if s.len() != expected || malformed {
            report.arity.push(ArityFault { vertex: v, expected, found: s.len(), malformed });
        }
    }
    report.unprioritized_cycle = unprioritized_cycle(g);
    match &g.exit {
        Some(e) => {
            report.exit_present = g.labels.iter().any(|l| l.is_atom(e));
            report.negated_exit = (0..n)
                .filter(|&v| matches!(&g.labels[v], Label::Lit { atom, neg: true } if atom == e))
                .collect();
        }
        None => report.exit_present = true,
    }
    report
}

/// Depth-first search for a cycle among vertices without a priority.
fn unprioritized_cycle(g: &SyntaxGraph) -> Option<Vec<usize>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let n = g.len();
    let free = |v: usize| v < n && g.priority[v].is_none();
    let mut mark = vec![Mark::New; n];
    for root in (0..n).filter(|&v| free(v)) {
        if mark[root] != Mark::New {
            continue;
        }
        // stack of (vertex, next successor index)
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Open;
        while let Some(top) = stack.last_mut() {
            let v = top.0;
            let next = g.succ[v].get(top.1).copied();
            top.1 += 1;
            let Some(t) = next else {
                mark[v] = Mark::Done;
                stack.pop();
                continue;
            };
            if !free(t) {
                continue;
            }
            match mark[t] {
                Mark::New => {
                    mark[t] = Mark::Open;
                    stack.push((t, 0));
                }
                Mark::Open => {
                    let start = stack.iter().position(|&(u, _)| u == t).expect("open vertex on stack");
                    return Some(stack[start..].iter().map(|&(u, _)| u).collect());
                }
                Mark::Done => {}
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn or_cycle_without_priority() {
        let mut g = SyntaxGraph::single(Label::Or);
        g.add_vertex(Label::Or, vec![0, 2], None);
        g.add_vertex(Label::lit("p"), vec![], None);
        g.succ[0] = vec![1, 2];
        let r = validate_graph(&g);
        assert!(r.arity_ok());
        assert_eq!(r.unprioritized_cycle, Some(vec![0, 1]));
        g.priority[1] = Some(1);
        assert!(validate_graph(&g).is_valid());
    }

    #[test]
    fn dia_with_two_successors() {
        let mut g = SyntaxGraph::single(Label::dia("g", false));
        g.add_vertex(Label::lit("p"), vec![], None);
        g.add_vertex(Label::lit("q"), vec![], None);
        g.succ[0] = vec![1, 2];
        let r = validate_graph(&g);
        assert_eq!(r.arity, vec![ArityFault { vertex: 0, expected: 1, found: 2, malformed: false }]);
    }

    #[test]
    fn repeated_successor_is_malformed() {
        let mut g = SyntaxGraph::single(Label::And);
        g.add_vertex(Label::lit("p"), vec![], None);
        g.succ[0] = vec![1, 1];
        assert!(validate_graph(&g).arity[0].malformed);
    }

    #[test]
    fn exit_conditions() {
        let mut g = SyntaxGraph::single(Label::Or);
        g.add_vertex(Label::lit("e"), vec![], None);
        g.add_vertex(Label::neg_lit("e"), vec![], None);
        g.succ[0] = vec![1, 2];
        let g = g.with_exit(Some("e".into()));
        let r = validate_graph(&g);
        assert!(r.exit_present);
        assert_eq!(r.negated_exit, vec![2]);
        let none = SyntaxGraph::single(Label::lit("p")).with_exit(Some("e".into()));
        assert!(!validate_graph(&none).exit_ok());
    }
}
