//! Finite parity games: arenas, a Zielonka solver and strategy checking.
//!
//! Plays are won by the larger-is-better parity rule: Eloise wins an
//! infinite play iff the highest priority seen infinitely often is even.
//! A player who cannot move loses.

mod io;
mod solve;
mod verify;

pub use io::{read_arena, write_arena};
pub use solve::{solve, SolveResult};
pub use verify::verify_strategy;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    #[serde(rename = "E")]
    Eloise,
    #[serde(rename = "A")]
    Abelard,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Eloise => Player::Abelard,
            Player::Abelard => Player::Eloise,
        }
    }

    /// The player favoured by an infinite play whose top priority is `p`.
    pub fn of_priority(p: u32) -> Player {
        if p % 2 == 0 {
            Player::Eloise
        } else {
            Player::Abelard
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParityError {
    #[error("position {position}: successor {target} out of range")]
    Dangling { position: usize, target: usize },
    #[error("duplicate position id {0}")]
    DuplicateId(i64),
    #[error("unknown position id {0}")]
    UnknownId(i64),
    #[error("result covers {found} positions, arena has {expected}")]
    Shape { expected: usize, found: usize },
    #[error("strategy at {position} moves to {target}, which is not a successor")]
    NotAMove { position: usize, target: usize },
    #[error("invalid arena JSON: {0}")]
    Json(String),
}

/// A parity-game arena with positions `0..len()`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ParityArena {
    owner: Vec<Player>,
    succ: Vec<Vec<usize>>,
    priority: Vec<u32>,
    initial: Option<usize>,
}

impl ParityArena {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a position without moves and returns its index.
    pub fn add_position(&mut self, owner: Player, priority: u32) -> usize {
        self.owner.push(owner);
        self.priority.push(priority);
        self.succ.push(Vec::new());
        self.owner.len() - 1
    }

    /// Changes the owner and priority of an existing position.
    pub fn set_position(&mut self, v: usize, owner: Player, priority: u32) {
        self.owner[v] = owner;
        self.priority[v] = priority;
    }

    /// Adds a move; duplicates are ignored.
    pub fn add_edge(&mut self, from: usize, to: usize) {
        if !self.succ[from].contains(&to) {
            self.succ[from].push(to);
        }
    }

    pub fn set_initial(&mut self, initial: Option<usize>) {
        self.initial = initial;
    }

    pub fn from_parts(
        owner: Vec<Player>,
        priority: Vec<u32>,
        succ: Vec<Vec<usize>>,
        initial: Option<usize>,
    ) -> Result<Self, ParityError> {
        let n = owner.len();
        if priority.len() != n || succ.len() != n {
            return Err(ParityError::Shape { expected: n, found: priority.len().min(succ.len()) });
        }
        for (position, s) in succ.iter().enumerate() {
            if let Some(&target) = s.iter().find(|&&t| t >= n) {
                return Err(ParityError::Dangling { position, target });
            }
        }
        if let Some(i) = initial.filter(|&i| i >= n) {
            return Err(ParityError::UnknownId(i as i64));
        }
        let mut arena = ParityArena { owner, succ: vec![Vec::new(); n], priority, initial };
        for (from, s) in succ.into_iter().enumerate() {
            for to in s {
                arena.add_edge(from, to);
            }
        }
        Ok(arena)
    }

    pub fn len(&self) -> usize {
        self.owner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.owner.is_empty()
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn priority(&self, v: usize) -> u32 {
        self.priority[v]
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn initial(&self) -> Option<usize> {
        self.initial
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }
}
