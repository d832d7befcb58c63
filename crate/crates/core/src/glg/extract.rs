//! Game logic graphs back to game terms.
//!
//! Acyclic graphs are read off vertex by vertex. Otherwise the head `h`
//! of highest priority is cut: once with `h` turned into a placeholder
//! game leading to its leave branch, and once with the remain branch as a
//! graph of its own whose exit is `h`. The second graph yields the body
//! `λ` of the loop, substituted as `λ^*` (odd head) or `λ^x` (even head).

use std::collections::BTreeSet;

use super::{check_glg, fresh_name, GlgError};
use crate::graph::{generated_subgraph, validate_graph, Label, SyntaxGraph};
use crate::syntax::{is_reserved, Formula, Game};

/// Atom used for trivial tests when the graph offers none.
pub const FALLBACK_TAUTOLOGY_ATOM: &str = "$t";

/// A game `δ` with `<δ>e` equivalent to `g`, for a game logic graph with
/// exit `e`.
pub fn extract_game(g: &SyntaxGraph) -> Result<Game, GlgError> {
    let exit = g.exit.clone().ok_or(GlgError::MissingExit)?;
    let report = validate_graph(g);
    if !report.is_valid() {
        return Err(GlgError::InvalidGraph(Box::new(report)));
    }
    run(g, &exit)
}

/// A formula equivalent to `g`, a game logic graph without exit. The
/// result is `<δ>ê` for a fresh reserved letter `ê` that `δ` never reaches.
pub fn extract_formula(g: &SyntaxGraph) -> Result<Formula, GlgError> {
    let mut taken = names(g);
    let exit = fresh_name("$e", &mut taken);
    let g = g.clone().with_exit(Some(exit.clone()));
    let report = validate_graph(&g);
    if !(report.initial_in_range && report.arity_ok() && report.priority_ok()) {
        return Err(GlgError::InvalidGraph(Box::new(report)));
    }
    Ok(Formula::dia(run(&g, &exit)?, Formula::atom(exit)))
}

fn names(g: &SyntaxGraph) -> BTreeSet<String> {
    let mut taken = g.atoms();
    taken.extend(g.games());
    taken.extend(g.exit.clone());
    taken
}

fn run(g: &SyntaxGraph, exit: &str) -> Result<Game, GlgError> {
    let report = check_glg(g, true);
    if !report.passes() {
        return Err(GlgError::NotGlg(Box::new(report)));
    }
    let g = generated_subgraph(g, g.initial).expect("initial in range").0;
    let tautology = g
        .atoms()
        .into_iter()
        .find(|a| a != exit && !is_reserved(a))
        .unwrap_or_else(|| FALLBACK_TAUTOLOGY_ATOM.to_string());
    let mut x = Extractor { taken: names(&g), tautology };
    x.taken.insert(FALLBACK_TAUTOLOGY_ATOM.to_string());
    x.game(&g, exit)
}

struct Extractor {
    taken: BTreeSet<String>,
    tautology: String,
}

impl Extractor {
    fn game(&mut self, g: &SyntaxGraph, exit: &str) -> Result<Game, GlgError> {
        let Some(n) = g.max_priority() else {
            return Ok(self.acyclic(g, exit));
        };
        let report = check_glg(g, true);
        let head = report.head(n).filter(|h| h.passes()).ok_or_else(|| {
            GlgError::Internal(format!("subgraph lost the game logic graph conditions at priority {n}"))
        })?;
        let h = head.head;
        let branches = head.witness.expect("passing head has a witness");
        let (l, r) = (branches.leave, branches.remain);
        if g.reachable(l)[h] {
            return Err(GlgError::Internal(format!("head {h} reachable from its leave branch")));
        }

        let placeholder = fresh_name("$g", &mut self.taken);
        let mut outer = g.clone();
        outer.labels[h] = Label::dia(placeholder.clone(), false);
        outer.succ[h] = vec![l];
        outer.priority[h] = None;
        let outer = generated_subgraph(&outer, outer.initial).expect("in range").0;

        let inner_exit = fresh_name("$e", &mut self.taken);
        let mut inner = g.clone();
        inner.labels[h] = Label::lit(inner_exit.clone());
        inner.succ[h] = vec![];
        inner.priority[h] = None;
        inner.initial = r;
        inner.exit = Some(inner_exit.clone());
        let inner = generated_subgraph(&inner, r).expect("in range").0;
        if inner.labels.iter().any(|l| l.is_atom(exit)) {
            return Err(GlgError::Internal(format!("exit `{exit}` reachable from the remain branch of {h}")));
        }

        let delta0 = self.game(&outer, exit)?;
        let lambda = self.game(&inner, &inner_exit)?;
        let looped = if n % 2 == 1 { Game::star(lambda) } else { Game::cross(lambda) };
        Ok(delta0.substitute(&placeholder, &looped))
    }

    /// Reads off an acyclic graph from the sinks up.
    fn acyclic(&self, g: &SyntaxGraph, exit: &str) -> Game {
        let mut memo: Vec<Option<Game>> = vec![None; g.len()];
        for v in postorder(g) {
            let at = |u: usize| memo[u].clone().expect("successors first");
            let game = match &g.labels[v] {
                Label::Lit { atom, neg: false } if atom == exit => {
                    let t = Formula::atom(self.tautology.clone());
                    Game::test(Formula::or(t.clone(), Formula::neg(t)))
                }
                Label::Lit { atom, neg } => {
                    let lit = if *neg { Formula::neg(Formula::atom(atom.clone())) } else { Formula::atom(atom.clone()) };
                    Game::seq(Game::test(lit.clone()), Game::dual_test(lit))
                }
                Label::And => Game::cap(at(g.succ[v][0]), at(g.succ[v][1])),
                Label::Or => Game::cup(at(g.succ[v][0]), at(g.succ[v][1])),
                Label::Dia { game, dual } => {
                    let base = Game::atomic(game.clone());
                    let base = if *dual { Game::dual(base) } else { base };
                    Game::seq(base, at(g.succ[v][0]))
                }
            };
            memo[v] = Some(game);
        }
        memo[g.initial].take().expect("initial visited")
    }
}

/// Vertices reachable from the initial one, successors before predecessors.
fn postorder(g: &SyntaxGraph) -> Vec<usize> {
    let mut out = Vec::with_capacity(g.len());
    let mut seen = vec![false; g.len()];
    let mut stack = vec![(g.initial, 0usize)];
    seen[g.initial] = true;
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        let next = g.succ[v].get(top.1).copied();
        top.1 += 1;
        match next {
            Some(t) if !seen[t] => {
                seen[t] = true;
                stack.push((t, 0));
            }
            Some(_) => {}
            None => {
                out.push(v);
                stack.pop();
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{compile_formula, compile_game};
    use super::*;
    use crate::syntax::{parse_formula, parse_game};

    #[test]
    fn single_exit_vertex_is_trivial_test() {
        let g = SyntaxGraph::single(Label::lit("e")).with_exit(Some("e".into()));
        assert_eq!(extract_game(&g).unwrap(), parse_game_reserved("($t | !$t)?"));
        let mut g = SyntaxGraph::single(Label::Or);
        g.add_vertex(Label::lit("e"), vec![], None);
        g.add_vertex(Label::lit("q"), vec![], None);
        g.succ[0] = vec![1, 2];
        let g = g.with_exit(Some("e".into()));
        assert_eq!(extract_game(&g).unwrap(), parse_game("(q | !q)? u (q? ; q!)").unwrap());
    }

    fn parse_game_reserved(t: &str) -> Game {
        crate::syntax::parse_game_with(t, crate::syntax::ParseOptions { allow_reserved: true }).unwrap()
    }

    #[test]
    fn atomic_game_reads_back() {
        let g = compile_game(&parse_game("g").unwrap(), "e").unwrap();
        assert_eq!(extract_game(&g).unwrap(), parse_game_reserved("g ; ($t | !$t)?"));
    }

    #[test]
    fn star_becomes_star_of_body() {
        let g = compile_game(&parse_game("g^*").unwrap(), "e").unwrap();
        let d = extract_game(&g).unwrap();
        assert!(d.to_string().contains("^*"), "{d}");
        assert!(!d.atoms().contains("e"));
    }

    #[test]
    fn extracted_formula_has_fresh_exit() {
        let g = compile_formula(&parse_formula("<g^x>p").unwrap()).unwrap();
        let f = extract_formula(&g).unwrap();
        let Formula::Dia(game, exit) = &f else { panic!("{f}") };
        assert!(matches!(&**exit, Formula::Atom(e) if is_reserved(e)));
        assert!(game.to_string().contains("^x"));
    }

    #[test]
    fn needs_exit_and_glg() {
        let g = SyntaxGraph::single(Label::lit("p"));
        assert!(matches!(extract_game(&g), Err(GlgError::MissingExit)));
        let mut g = SyntaxGraph::single(Label::Or);
        g.add_vertex(Label::dia("g", false), vec![0], None);
        g.add_vertex(Label::dia("h", false), vec![0], None);
        g.succ[0] = vec![1, 2];
        g.priority[0] = Some(1);
        assert!(matches!(extract_formula(&g), Err(GlgError::NotGlg(_))));
    }
}
