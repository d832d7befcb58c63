//! Explicit enumeration of simple paths and simple cycles.

use glw_core::graph::SyntaxGraph;

/// All simple paths from `start` through `allowed` vertices that end in a
/// `goal` vertex.
pub fn simple_paths(
    g: &SyntaxGraph,
    start: usize,
    allowed: &dyn Fn(usize) -> bool,
    goal: &dyn Fn(usize) -> bool,
) -> Vec<Vec<usize>> {
    fn go(
        g: &SyntaxGraph,
        path: &mut Vec<usize>,
        on: &mut [bool],
        allowed: &dyn Fn(usize) -> bool,
        goal: &dyn Fn(usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let v = *path.last().unwrap();
        if goal(v) {
            out.push(path.clone());
        }
        for &t in &g.succ[v] {
            if !on[t] && allowed(t) {
                on[t] = true;
                path.push(t);
                go(g, path, on, allowed, goal, out);
                path.pop();
                on[t] = false;
            }
        }
    }
    let mut out = Vec::new();
    if allowed(start) {
        let mut on = vec![false; g.len()];
        on[start] = true;
        go(g, &mut vec![start], &mut on, allowed, goal, &mut out);
    }
    out
}

/// Every simple cycle, once, as the vertex list starting at its least
/// vertex.
pub fn simple_cycles(g: &SyntaxGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for s in 0..g.len() {
        for p in simple_paths(g, s, &|v| v >= s, &|v| g.succ[v].contains(&s)) {
            out.push(p);
        }
    }
    out
}

/// Max priority along a path, `None` if no vertex carries one.
pub fn path_max(g: &SyntaxGraph, path: &[usize]) -> Option<u32> {
    path.iter().filter_map(|&v| g.priority[v]).max()
}

pub fn leaving_cycles_oracle(g: &SyntaxGraph, head: usize, leave: usize) -> bool {
    let n = g.priority[head].unwrap();
    simple_paths(g, leave, &|_| true, &|v| v == head).iter().any(|p| path_max(g, p).is_none_or(|m| m <= n))
}

pub fn no_remain_oracle(g: &SyntaxGraph, head: usize, remain: usize) -> bool {
    let n = g.priority[head].unwrap();
    remain != head && !simple_paths(g, remain, &|v| v != head, &|v| g.priority[v].is_some_and(|p| p > n)).is_empty()
}

pub fn exit_oracle(g: &SyntaxGraph, head: usize, remain: usize, exit: &str) -> bool {
    remain != head && !simple_paths(g, remain, &|v| v != head, &|v| g.labels[v].is_atom(exit)).is_empty()
}

/// Is `path` a simple path of `g`.
pub fn is_simple_path(g: &SyntaxGraph, path: &[usize]) -> bool {
    let distinct = (0..path.len()).all(|i| !path[..i].contains(&path[i]));
    distinct && path.windows(2).all(|w| g.succ[w[0]].contains(&w[1]))
}
