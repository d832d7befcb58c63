use std::collections::HashMap;

use super::{Label, SyntaxGraph};
use crate::nbhd::{GameModel, StateSet};
use crate::parity::{solve, ParityArena, Player};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AcceptancePosition {
    State { vertex: usize, state: usize },
    /// A neighbourhood chosen at a modal vertex.
    Nbhd { vertex: usize, set: StateSet },
}

#[derive(Clone, Debug)]
pub struct AcceptanceArena {
    pub arena: ParityArena,
    pub positions: Vec<AcceptancePosition>,
    index: HashMap<AcceptancePosition, usize>,
}

impl AcceptanceArena {
    pub fn lookup(&self, position: &AcceptancePosition) -> Option<usize> {
        self.index.get(position).copied()
    }
}

/// The acceptance game of `g` on `model`, with positions reachable from
/// `(initial, s)` for every state `s`. `g` must be a valid syntax graph.
pub fn build_acceptance_arena(g: &SyntaxGraph, model: &GameModel) -> AcceptanceArena {
    let n = model.width();
    let frames: HashMap<String, _> = g.games().into_iter().map(|name| (name.clone(), model.game(&name))).collect();
    let mut arena = ParityArena::new();
    let mut positions = Vec::new();
    let mut index = HashMap::new();
    let mut intern = |arena: &mut ParityArena, positions: &mut Vec<AcceptancePosition>, p: AcceptancePosition| {
        *index.entry(p).or_insert_with(|| {
            positions.push(p);
            arena.add_position(Player::Eloise, 0)
        })
    };
    for s in 0..n {
        intern(&mut arena, &mut positions, AcceptancePosition::State { vertex: g.initial, state: s });
    }
    let mut next = 0;
    while next < positions.len() {
        let v = next;
        next += 1;
        let (owner, priority, targets): (Player, u32, Vec<AcceptancePosition>) = match positions[v] {
            AcceptancePosition::State { vertex, state } => {
                let prio = g.priority[vertex].unwrap_or(0);
                let at = |w: usize| AcceptancePosition::State { vertex: w, state };
                match &g.labels[vertex] {
                    Label::Lit { atom, neg } => {
                        let holds = model.atom(atom).contains(state) != *neg;
                        (if holds { Player::Abelard } else { Player::Eloise }, prio, vec![])
                    }
                    Label::And => (Player::Abelard, prio, g.succ[vertex].iter().map(|&w| at(w)).collect()),
                    Label::Or => (Player::Eloise, prio, g.succ[vertex].iter().map(|&w| at(w)).collect()),
                    Label::Dia { game, dual } => {
                        let owner = if *dual { Player::Abelard } else { Player::Eloise };
                        let sets = frames[game].family(state).members();
                        (owner, prio, sets.into_iter().map(|set| AcceptancePosition::Nbhd { vertex, set }).collect())
                    }
                }
            }
            AcceptancePosition::Nbhd { vertex, set } => {
                let Label::Dia { dual, .. } = g.labels[vertex] else { unreachable!("neighbourhoods follow modal vertices") };
                let owner = if dual { Player::Eloise } else { Player::Abelard };
                let w = g.succ[vertex][0];
                let targets = set.iter().map(|t| AcceptancePosition::State { vertex: w, state: t }).collect();
                (owner, g.priority[vertex].unwrap_or(0), targets)
            }
        };
        arena.set_position(v, owner, priority);
        for p in targets {
            let t = intern(&mut arena, &mut positions, p);
            arena.add_edge(v, t);
        }
    }
    AcceptanceArena { arena, positions, index }
}

/// States of `model` at which `g` is accepted.
pub fn accepts(g: &SyntaxGraph, model: &GameModel) -> StateSet {
    let board = build_acceptance_arena(g, model);
    let result = solve(&board.arena);
    StateSet::from_states((0..model.width()).filter(|&s| {
        let v = board.lookup(&AcceptancePosition::State { vertex: g.initial, state: s }).expect("root exists");
        result.wins(Player::Eloise, v)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nbhd::{eval_standard, Frame, NbhdFamily};
    use crate::syntax::parse_formula;

    fn m1() -> GameModel {
        let mut m = GameModel::with_size(2).unwrap();
        m.set_atom("p", StateSet::singleton(1)).unwrap();
        let g = NbhdFamily::principal(2, StateSet::singleton(1));
        m.set_game("g", Frame::new(vec![g.clone(), g]).unwrap()).unwrap();
        m
    }

    fn dia_then(atom: &str) -> SyntaxGraph {
        let mut g = SyntaxGraph::single(Label::dia("g", false));
        g.add_vertex(Label::lit(atom), vec![], None);
        g.succ[0] = vec![1];
        g
    }

    #[test]
    fn modal_vertex_moves() {
        let m = m1();
        let g = dia_then("e");
        let board = build_acceptance_arena(&g, &m);
        let root = board.lookup(&AcceptancePosition::State { vertex: 0, state: 0 }).unwrap();
        let nb = board.lookup(&AcceptancePosition::Nbhd { vertex: 0, set: StateSet::singleton(1) }).unwrap();
        assert!(board.arena.successors(root).contains(&nb));
        let leaf = board.lookup(&AcceptancePosition::State { vertex: 1, state: 1 }).unwrap();
        assert_eq!(board.arena.successors(nb), &[leaf]);
        assert_eq!(board.arena.owner(leaf), Player::Eloise);
        assert!(board.arena.successors(leaf).is_empty());
        assert_eq!(accepts(&g, &m), StateSet::EMPTY);
    }

    #[test]
    fn matches_formula() {
        let m = m1();
        let f = parse_formula("<g>p").unwrap();
        assert_eq!(accepts(&dia_then("p"), &m), eval_standard(&m, &f));
        assert_eq!(accepts(&SyntaxGraph::single(Label::lit("p")), &m), StateSet::singleton(1));
    }

    #[test]
    fn cycle_priorities_decide() {
        // v0: Or(v1, v2); v1: <g> v0; v2: p. Odd priority on v0 is <g^*>p.
        let mut g = SyntaxGraph::single(Label::Or);
        g.add_vertex(Label::dia("g", false), vec![0], None);
        g.add_vertex(Label::lit("q"), vec![], None);
        g.succ[0] = vec![1, 2];
        g.priority[0] = Some(1);
        let m = m1();
        assert_eq!(accepts(&g, &m), StateSet::EMPTY);
        g.priority[0] = Some(0);
        assert_eq!(accepts(&g, &m), StateSet::full(2));
    }
}
