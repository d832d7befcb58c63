//! Formulas and games to game logic graphs.
//!
//! A game `α` with exit `e` becomes a graph equivalent to `<α>e`; a
//! formula becomes a graph without exit. Every step prunes unreachable
//! vertices; priorities of the left component are lifted by an even
//! offset so that no two vertices share one.

use std::collections::BTreeSet;

use super::{fresh_name, GlgError};
use crate::graph::{generated_subgraph, Label, SyntaxGraph};
use crate::syntax::{is_dnnf_formula, is_dnnf_game, Formula, Game};

pub fn compile_game(game: &Game, exit: &str) -> Result<SyntaxGraph, GlgError> {
    if !is_dnnf_game(game) {
        return Err(GlgError::NotDnnf(game.to_string()));
    }
    if game.atoms().contains(exit) {
        return Err(GlgError::ExitInGame(exit.to_string()));
    }
    let mut taken = game.atoms();
    taken.insert(exit.to_string());
    let mut c = Compiler { taken };
    let g = c.game(game, exit);
    Ok(g.with_exit(Some(exit.to_string())))
}

pub fn compile_formula(formula: &Formula) -> Result<SyntaxGraph, GlgError> {
    if !is_dnnf_formula(formula) {
        return Err(GlgError::NotDnnf(formula.to_string()));
    }
    let mut c = Compiler { taken: formula.atoms() };
    Ok(c.formula(formula))
}

struct Compiler {
    /// Atoms fresh exits must avoid.
    taken: BTreeSet<String>,
}

impl Compiler {
    fn game(&mut self, game: &Game, exit: &str) -> SyntaxGraph {
        let g = match game {
            Game::Atomic(name) => atomic(name, false, exit),
            Game::Dual(inner) => match &**inner {
                Game::Atomic(name) => atomic(name, true, exit),
                _ => unreachable!("checked DNNF"),
            },
            Game::Seq(a, b) => {
                let first = self.game(a, exit);
                let second = self.game(b, exit);
                compose(&first, exit, &second)
            }
            Game::Cup(a, b) => choice(Label::Or, &self.game(a, exit), &self.game(b, exit)),
            Game::Cap(a, b) => choice(Label::And, &self.game(a, exit), &self.game(b, exit)),
            Game::Star(a) => iterate(Label::Or, &self.game(a, exit), exit),
            Game::Cross(a) => iterate(Label::And, &self.game(a, exit), exit),
            Game::Test(f) => test(Label::And, &self.formula(f), exit),
            Game::DualTest(f) => test(Label::Or, &self.formula(f), exit),
        };
        debug_assert!(injective(&g));
        g
    }

    fn formula(&mut self, formula: &Formula) -> SyntaxGraph {
        let g = match formula {
            Formula::Atom(p) => SyntaxGraph::single(Label::lit(p.clone())),
            Formula::Neg(inner) => match &**inner {
                Formula::Atom(p) => SyntaxGraph::single(Label::neg_lit(p.clone())),
                _ => unreachable!("checked DNNF"),
            },
            Formula::And(a, b) => choice(Label::And, &self.formula(a), &self.formula(b)),
            Formula::Or(a, b) => choice(Label::Or, &self.formula(a), &self.formula(b)),
            Formula::Dia(game, rest) => {
                let exit = fresh_name("$e", &mut self.taken);
                let first = self.game(game, &exit);
                let second = self.formula(rest);
                compose(&first, &exit, &second)
            }
        };
        debug_assert!(injective(&g));
        g
    }
}

fn injective(g: &SyntaxGraph) -> bool {
    let ps: Vec<u32> = g.priority.iter().flatten().copied().collect();
    ps.iter().collect::<BTreeSet<_>>().len() == ps.len()
}

/// Smallest even number above every priority of `g`, 0 if it has none.
fn even_above(g: &SyntaxGraph) -> u32 {
    g.max_priority().map_or(0, |m| if m % 2 == 0 { m + 2 } else { m + 1 })
}

fn odd_above(g: &SyntaxGraph) -> u32 {
    g.max_priority().map_or(1, |m| if m % 2 == 0 { m + 1 } else { m + 2 })
}

fn prune(g: SyntaxGraph) -> SyntaxGraph {
    generated_subgraph(&g, g.initial).expect("initial in range").0
}

/// Appends `src` to `dst`, mapping each successor through `route` first,
/// and lifting priorities by `shift`. Returns the offset of `src`.
fn append(dst: &mut SyntaxGraph, src: &SyntaxGraph, shift: u32, route: impl Fn(usize) -> Option<usize>) -> usize {
    let offset = dst.len();
    for v in 0..src.len() {
        let succ = src.succ[v].iter().map(|&t| route(t).unwrap_or(t + offset)).collect();
        dst.add_vertex(src.labels[v].clone(), succ, src.priority[v].map(|p| p + shift));
    }
    offset
}

fn empty() -> SyntaxGraph {
    SyntaxGraph { labels: vec![], succ: vec![], priority: vec![], initial: 0, exit: None }
}

fn atomic(name: &str, dual: bool, exit: &str) -> SyntaxGraph {
    let mut g = SyntaxGraph::single(Label::dia(name, dual));
    let e = g.add_vertex(Label::lit(exit), vec![], None);
    g.succ[0] = vec![e];
    g
}

fn choice(label: Label, left: &SyntaxGraph, right: &SyntaxGraph) -> SyntaxGraph {
    let mut g = SyntaxGraph::single(label);
    let l = append(&mut g, left, even_above(right), |_| None);
    let r = append(&mut g, right, 0, |_| None);
    g.succ[0] = vec![l + left.initial, r + right.initial];
    prune(g)
}

/// `first ; second`: edges into `first`'s exit vertices go to `second`.
fn compose(first: &SyntaxGraph, exit: &str, second: &SyntaxGraph) -> SyntaxGraph {
    let mut g = empty();
    let offset = first.len();
    let target = offset + second.initial;
    let is_exit = |t: usize| first.labels[t].is_atom(exit);
    append(&mut g, first, even_above(second), |t| is_exit(t).then_some(target));
    append(&mut g, second, 0, |_| None);
    g.initial = if is_exit(first.initial) { target } else { first.initial };
    prune(g)
}

/// `α^*` or `α^x`: a new head whose remain branch runs `body`, with the
/// body's exits routed back to the head.
fn iterate(label: Label, body: &SyntaxGraph, exit: &str) -> SyntaxGraph {
    let priority = if label == Label::Or { odd_above(body) } else { even_above(body) };
    let mut g = SyntaxGraph::single(label);
    g.priority[0] = Some(priority);
    let leave = g.add_vertex(Label::lit(exit), vec![], None);
    let offset = append(&mut g, body, 0, |t| body.labels[t].is_atom(exit).then_some(0));
    g.succ[0] = vec![leave, offset + body.initial];
    prune(g)
}

/// `φ?` as `φ ∧ e`, `φ!` as `φ ∨ e`.
fn test(label: Label, formula: &SyntaxGraph, exit: &str) -> SyntaxGraph {
    let mut g = SyntaxGraph::single(label);
    let offset = append(&mut g, formula, 0, |_| None);
    let e = g.add_vertex(Label::lit(exit), vec![], None);
    g.succ[0] = vec![offset + formula.initial, e];
    prune(g)
}
