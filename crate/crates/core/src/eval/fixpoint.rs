//! Fixpoint games: whether `U` is a neighbourhood of `s` under `α^*` or
//! `α^x`, decided by a reachability or safety game on states and
//! neighbourhoods of `α`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::nbhd::{game_denotation, GameModel, StateSet};
use crate::parity::{solve, ParityArena, Player};
use crate::syntax::Game;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FixKind {
    Star,
    Cross,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixpointPosition {
    State(usize),
    Subset(StateSet),
}

/// A fixpoint board. State `s` is position `s`.
#[derive(Clone, Debug)]
pub struct FixpointArena {
    pub arena: ParityArena,
    pub positions: Vec<FixpointPosition>,
}

pub fn build_fixpoint_arena(model: &GameModel, game: &Game, target: StateSet, kind: FixKind) -> FixpointArena {
    let n = model.width();
    let frame = game_denotation(model, game);
    // infinite plays go to Abelard for star and to Eloise for cross
    let priority = match kind {
        FixKind::Star => 1,
        FixKind::Cross => 0,
    };
    let mut arena = ParityArena::new();
    let mut positions: Vec<FixpointPosition> = (0..n).map(FixpointPosition::State).collect();
    for _ in 0..n {
        arena.add_position(Player::Eloise, priority);
    }
    let mut subsets: HashMap<StateSet, usize> = HashMap::new();
    let mut subset = |arena: &mut ParityArena, positions: &mut Vec<FixpointPosition>, set: StateSet| {
        *subsets.entry(set).or_insert_with(|| {
            positions.push(FixpointPosition::Subset(set));
            arena.add_position(Player::Abelard, priority)
        })
    };
    for s in 0..n {
        let moves: Vec<StateSet> = match (kind, target.contains(s)) {
            // stopping: the empty neighbourhood leaves Abelard stuck
            (FixKind::Star, true) => vec![StateSet::EMPTY],
            (FixKind::Cross, false) => vec![],
            _ => frame.family(s).members(),
        };
        for set in moves {
            let v = subset(&mut arena, &mut positions, set);
            arena.add_edge(s, v);
        }
    }
    for (v, pos) in positions.iter().enumerate() {
        if let FixpointPosition::Subset(set) = pos {
            for t in set.iter() {
                arena.add_edge(v, t);
            }
        }
    }
    FixpointArena { arena, positions }
}

pub fn fixpoint_member_by_game(model: &GameModel, game: &Game, target: StateSet, kind: FixKind, state: usize) -> bool {
    let board = build_fixpoint_arena(model, game, target, kind);
    solve(&board.arena).wins(Player::Eloise, state)
}
