//! Evaluation games: model checking a formula by solving a parity game.

mod fixpoint;

pub use fixpoint::{build_fixpoint_arena, fixpoint_member_by_game, FixKind, FixpointArena, FixpointPosition};

use std::collections::HashMap;

use indexmap::IndexSet;

use crate::nbhd::{game_denotation, GameModel, NbhdFamily, StateSet};
use crate::parity::{solve, ParityArena, Player};
use crate::syntax::closure::{step, Step};
use crate::syntax::{canonical_priorities, eval_closure, is_dnnf_formula, to_dnnf, Formula, Game, PriorityAssignment};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvalError {
    #[error("formula `{0}` is not in dual and negation normal form")]
    NotDnnf(Formula),
}

/// A board position; formulas are indices into [`EvalArena::closure`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EvalPosition {
    State { state: usize, formula: usize },
    /// A neighbourhood chosen at a modal row, with that row's formula.
    Nbhd { set: StateSet, formula: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EvalOptions {
    /// Offer only the minimal neighbourhoods at modal rows.
    pub minimal_moves: bool,
}

#[derive(Clone, Debug)]
pub struct EvalArena {
    pub arena: ParityArena,
    pub positions: Vec<EvalPosition>,
    pub closure: IndexSet<Formula>,
    index: HashMap<EvalPosition, usize>,
}

impl EvalArena {
    pub fn position_of(&self, state: usize, formula: &Formula) -> Option<usize> {
        let formula = self.closure.get_index_of(formula)?;
        self.index.get(&EvalPosition::State { state, formula }).copied()
    }

    pub fn lookup(&self, position: &EvalPosition) -> Option<usize> {
        self.index.get(position).copied()
    }

    pub fn formula(&self, v: usize) -> &Formula {
        match self.positions[v] {
            EvalPosition::State { formula, .. } | EvalPosition::Nbhd { formula, .. } => &self.closure[formula],
        }
    }
}

/// Precomputed board rows over the closure.
enum Row {
    Literal(bool),
    And(usize, usize),
    Or(usize, usize),
    Modal { frame: usize, dual: bool, sub: usize },
    Unfold(usize),
}

/// Builds the evaluation game of `formula` over `model`, with positions
/// reachable from `(s, formula)` for every state `s`.
pub fn build_eval_arena(
    model: &GameModel,
    formula: &Formula,
    priorities: &PriorityAssignment,
    options: EvalOptions,
) -> Result<EvalArena, EvalError> {
    if !is_dnnf_formula(formula) {
        return Err(EvalError::NotDnnf(formula.clone()));
    }
    let n = model.width();
    let closure = eval_closure(formula);
    let mut frames: IndexSet<String> = IndexSet::new();
    let mut rows = Vec::with_capacity(closure.len());
    let mut prio = Vec::with_capacity(closure.len());
    let idx = |f: &Formula| closure.get_index_of(f).expect("closure is closed");
    for f in &closure {
        prio.push(match f {
            Formula::Dia(g, _) => priorities.get(g).unwrap_or(0),
            _ => 0,
        });
        rows.push(match step(f).expect("closure of a DNNF formula") {
            Step::Literal { negated, .. } => Row::Literal(!negated),
            Step::And(a, b) => Row::And(idx(&a), idx(&b)),
            Step::Or(a, b) => Row::Or(idx(&a), idx(&b)),
            Step::Modal { game, dual, sub } => {
                let (frame, _) = frames.insert_full(game);
                Row::Modal { frame, dual, sub: idx(&sub) }
            }
            Step::Unfold(next) => Row::Unfold(idx(&next)),
        });
    }
    let atoms: Vec<Option<StateSet>> = closure
        .iter()
        .map(|f| match step(f) {
            Some(Step::Literal { atom, .. }) => Some(model.atom(&atom)),
            _ => None,
        })
        .collect();
    let frames: Vec<_> = frames.iter().map(|g| game_denotation(model, &Game::atomic(g.clone()))).collect();
    let moves = |fam: &NbhdFamily| -> Vec<StateSet> {
        if options.minimal_moves {
            fam.antichain().to_vec()
        } else {
            fam.members()
        }
    };

    let mut builder = Builder::default();
    let root = idx(formula);
    for s in 0..n {
        builder.intern(EvalPosition::State { state: s, formula: root });
    }
    let mut next = 0;
    while next < builder.positions.len() {
        let pos = builder.positions[next];
        let v = next;
        next += 1;
        match pos {
            EvalPosition::State { state, formula: fi } => {
                let (owner, targets): (Player, Vec<EvalPosition>) = match &rows[fi] {
                    Row::Literal(positive) => {
                        let holds = atoms[fi].expect("literal row").contains(state) == *positive;
                        (if holds { Player::Abelard } else { Player::Eloise }, vec![])
                    }
                    Row::And(a, b) => (Player::Abelard, vec![at(state, *a), at(state, *b)]),
                    Row::Or(a, b) => (Player::Eloise, vec![at(state, *a), at(state, *b)]),
                    Row::Modal { frame, dual, .. } => {
                        let owner = if *dual { Player::Abelard } else { Player::Eloise };
                        let sets = moves(frames[*frame].family(state));
                        (owner, sets.into_iter().map(|set| EvalPosition::Nbhd { set, formula: fi }).collect())
                    }
                    Row::Unfold(t) => (Player::Eloise, vec![at(state, *t)]),
                };
                builder.finish(v, owner, prio[fi], targets);
            }
            EvalPosition::Nbhd { set, formula: fi } => {
                let Row::Modal { dual, sub, .. } = rows[fi] else { unreachable!("neighbourhoods follow modal rows") };
                let owner = if dual { Player::Eloise } else { Player::Abelard };
                let targets = set.iter().map(|t| at(t, sub)).collect();
                builder.finish(v, owner, 0, targets);
            }
        }
    }
    let Builder { positions, index, owner, priority, succ } = builder;
    let arena = ParityArena::from_parts(owner, priority, succ, None).expect("built in range");
    Ok(EvalArena { arena, positions, closure, index })
}

fn at(state: usize, formula: usize) -> EvalPosition {
    EvalPosition::State { state, formula }
}

#[derive(Default)]
struct Builder {
    positions: Vec<EvalPosition>,
    index: HashMap<EvalPosition, usize>,
    owner: Vec<Player>,
    priority: Vec<u32>,
    succ: Vec<Vec<usize>>,
}

impl Builder {
    fn intern(&mut self, pos: EvalPosition) -> usize {
        if let Some(&v) = self.index.get(&pos) {
            return v;
        }
        let v = self.positions.len();
        self.positions.push(pos);
        self.index.insert(pos, v);
        self.owner.push(Player::Eloise);
        self.priority.push(0);
        self.succ.push(Vec::new());
        v
    }

    fn finish(&mut self, v: usize, owner: Player, priority: u32, targets: Vec<EvalPosition>) {
        self.owner[v] = owner;
        self.priority[v] = priority;
        let succ: Vec<usize> = targets.into_iter().map(|t| self.intern(t)).collect();
        self.succ[v] = succ;
    }
}

/// The truth set of `formula` read off Eloise's winning region.
pub fn eval_by_game(model: &GameModel, formula: &Formula) -> StateSet {
    eval_by_game_with(model, formula, EvalOptions::default())
}

pub fn eval_by_game_with(model: &GameModel, formula: &Formula, options: EvalOptions) -> StateSet {
    let f = to_dnnf(formula);
    let priorities = canonical_priorities(&f);
    let board = build_eval_arena(model, &f, &priorities, options).expect("normalized");
    let result = solve(&board.arena);
    StateSet::from_states((0..model.width()).filter(|&s| {
        let v = board.position_of(s, &f).expect("root positions exist");
        result.wins(Player::Eloise, v)
    }))
}
