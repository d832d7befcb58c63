use std::collections::BTreeMap;

use super::{Frame, ModelError, NbhdFamily, StateSet, MAX_STATES};
use crate::syntax::{Formula, Game, Term};

/// A finite game model: states, a valuation of atoms and a neighbourhood
/// frame for every atomic game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameModel {
    states: Vec<String>,
    valuation: BTreeMap<String, StateSet>,
    games: BTreeMap<String, Frame>,
}

impl GameModel {
    pub fn new(states: Vec<String>) -> Result<Self, ModelError> {
        if states.is_empty() {
            return Err(ModelError::NoStates);
        }
        if states.len() > MAX_STATES {
            return Err(ModelError::TooManyStates(states.len()));
        }
        for (i, s) in states.iter().enumerate() {
            if states[..i].contains(s) {
                return Err(ModelError::DuplicateState(s.clone()));
            }
        }
        Ok(GameModel { states, valuation: BTreeMap::new(), games: BTreeMap::new() })
    }

    /// A model with states `s0 .. s{n-1}` and empty alphabets.
    pub fn with_size(n: usize) -> Result<Self, ModelError> {
        Self::new((0..n).map(|i| format!("s{i}")).collect())
    }

    pub fn width(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn valuation(&self) -> &BTreeMap<String, StateSet> {
        &self.valuation
    }

    pub fn games(&self) -> &BTreeMap<String, Frame> {
        &self.games
    }

    pub fn set_atom(&mut self, atom: impl Into<String>, truth: StateSet) -> Result<(), ModelError> {
        if !truth.fits(self.width()) {
            return Err(ModelError::WidthMismatch { expected: self.width(), found: truth.iter().last().unwrap_or(0) + 1 });
        }
        self.valuation.insert(atom.into(), truth);
        Ok(())
    }

    pub fn set_game(&mut self, game: impl Into<String>, frame: Frame) -> Result<(), ModelError> {
        if frame.width() != self.width() {
            return Err(ModelError::WidthMismatch { expected: self.width(), found: frame.width() });
        }
        self.games.insert(game.into(), frame);
        Ok(())
    }

    /// Unknown atoms are false everywhere.
    pub fn atom(&self, atom: &str) -> StateSet {
        self.valuation.get(atom).copied().unwrap_or_default()
    }

    /// Unknown games have the empty family at every state.
    pub fn game(&self, game: &str) -> Frame {
        self.games.get(game).cloned().unwrap_or_else(|| Frame::bottom(self.width()))
    }

    /// Strict mode: every atom and game of `term` is declared.
    pub fn check_alphabet(&self, term: &Term) -> Result<(), ModelError> {
        let (atoms, games) = match term {
            Term::Formula(f) => (f.atoms(), f.games()),
            Term::Game(g) => (g.atoms(), g.games()),
        };
        if let Some(a) = atoms.into_iter().find(|a| !self.valuation.contains_key(a)) {
            return Err(ModelError::UnknownAtom(a));
        }
        if let Some(g) = games.into_iter().find(|g| !self.games.contains_key(g)) {
            return Err(ModelError::UnknownGame(g));
        }
        Ok(())
    }

    pub fn set_names(&self, set: StateSet) -> Vec<&str> {
        set.iter().map(|i| self.states[i].as_str()).collect()
    }
}

/// The truth set of `f`, by induction on the term.
pub fn eval_standard(model: &GameModel, f: &Formula) -> StateSet {
    let n = model.width();
    match f {
        Formula::Atom(p) => model.atom(p),
        Formula::Neg(a) => eval_standard(model, a).complement(n),
        Formula::And(a, b) => eval_standard(model, a).intersection(eval_standard(model, b)),
        Formula::Or(a, b) => eval_standard(model, a).union(eval_standard(model, b)),
        Formula::Dia(g, a) => {
            let target = eval_standard(model, a);
            let frame = game_denotation(model, g);
            StateSet::from_states((0..n).filter(|&s| frame.family(s).contains(target)))
        }
    }
}

/// The neighbourhood frame of `g`.
pub fn game_denotation(model: &GameModel, g: &Game) -> Frame {
    let n = model.width();
    match g {
        Game::Atomic(name) => model.game(name),
        Game::Dual(a) => game_denotation(model, a).dual(),
        Game::Seq(a, b) => game_denotation(model, a).seq(&game_denotation(model, b)).expect("same width"),
        Game::Cup(a, b) => game_denotation(model, a).cup(&game_denotation(model, b)).expect("same width"),
        Game::Cap(a, b) => game_denotation(model, a).cap(&game_denotation(model, b)).expect("same width"),
        Game::Star(a) => game_denotation(model, a).star(),
        Game::Cross(a) => game_denotation(model, a).cross(),
        Game::Test(psi) => {
            let truth = eval_standard(model, psi);
            Frame::from_fn(n, |x| {
                if truth.contains(x) {
                    NbhdFamily::principal(n, StateSet::singleton(x))
                } else {
                    NbhdFamily::empty(n)
                }
            })
        }
        Game::DualTest(psi) => {
            let truth = eval_standard(model, psi);
            Frame::from_fn(n, |x| {
                if truth.contains(x) {
                    NbhdFamily::full(n)
                } else {
                    NbhdFamily::principal(n, StateSet::singleton(x))
                }
            })
        }
    }
}
