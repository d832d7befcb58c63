//! Semantic equivalence of formulas and graphs, tested on seeded random
//! models. A verdict of equivalence only covers the sampled models.

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::exec::Execution;
use crate::graph::{accepts, SyntaxGraph};
use crate::nbhd::{
    eval_standard, random_model_with, write_model, Frame, GameModel, ModelError, NbhdFamily, StateSet,
    DEFAULT_DENSITY,
};
use crate::syntax::Formula;

pub const MAX_EQUIV_STATES: usize = 8;

#[derive(Clone, Copy, Debug)]
pub enum Side<'a> {
    Formula(&'a Formula),
    Graph(&'a SyntaxGraph),
}

impl Side<'_> {
    fn alphabet(&self) -> (BTreeSet<String>, BTreeSet<String>) {
        match self {
            Side::Formula(f) => (f.atoms(), f.games()),
            Side::Graph(g) => (g.atoms(), g.games()),
        }
    }

    fn eval(&self, model: &GameModel) -> StateSet {
        match self {
            Side::Formula(f) => eval_standard(model, f),
            Side::Graph(g) => accepts(g, model),
        }
    }
}

impl<'a> From<&'a Formula> for Side<'a> {
    fn from(f: &'a Formula) -> Self {
        Side::Formula(f)
    }
}

impl<'a> From<&'a SyntaxGraph> for Side<'a> {
    fn from(g: &'a SyntaxGraph) -> Self {
        Side::Graph(g)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EquivOptions {
    /// Largest model size sampled; sizes are drawn from `1..=n_states`.
    pub n_states: usize,
    pub samples: usize,
    pub seed: u64,
    pub density: f64,
    pub execution: Execution,
}

impl Default for EquivOptions {
    fn default() -> Self {
        EquivOptions { n_states: 4, samples: 100, seed: 0, density: DEFAULT_DENSITY, execution: Execution::default() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub model: GameModel,
    pub state: usize,
    pub left: bool,
    pub right: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Equivalent,
    Counterexample(Box<Counterexample>),
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Verdict::Equivalent)
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match self {
            Verdict::Equivalent => None,
            Verdict::Counterexample(c) => Some(c),
        }
    }

    /// `{"status": "equivalent"}` or `{"status": "counterexample",
    /// "counterexample": {"model": .., "state": .., "left": .., "right": ..}}`.
    pub fn to_json(&self) -> Value {
        match self {
            Verdict::Equivalent => json!({"status": "equivalent"}),
            Verdict::Counterexample(c) => {
                let model: Value = serde_json::from_slice(&write_model(&c.model)).expect("model JSON");
                json!({
                    "status": "counterexample",
                    "counterexample": {
                        "model": model,
                        "state": c.model.states()[c.state],
                        "left": c.left,
                        "right": c.right,
                    }
                })
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Error)]
pub enum EquivError {
    #[error("equivalence sampling supports 1 to {MAX_EQUIV_STATES} states, got {0}")]
    States(usize),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Compares `a` and `b` on every one-state model when both alphabets are
/// small, then on `samples` random models. Sample `i` uses its own
/// generator, so the verdict does not depend on the execution mode.
pub fn equiv(a: Side<'_>, b: Side<'_>, options: &EquivOptions) -> Result<Verdict, EquivError> {
    if options.n_states == 0 || options.n_states > MAX_EQUIV_STATES {
        return Err(EquivError::States(options.n_states));
    }
    let (mut atoms, mut games) = a.alphabet();
    let (atoms_b, games_b) = b.alphabet();
    atoms.extend(atoms_b);
    games.extend(games_b);
    let atoms: Vec<String> = atoms.into_iter().collect();
    let games: Vec<String> = games.into_iter().collect();

    let compare = |model: GameModel| -> Option<Counterexample> {
        let (x, y) = (a.eval(&model), b.eval(&model));
        let state = (0..model.width()).find(|&s| x.contains(s) != y.contains(s))?;
        Some(Counterexample { left: x.contains(state), right: y.contains(state), state, model })
    };

    if atoms.len() <= 2 && games.len() <= 2 {
        let total = (1usize << atoms.len()) * 3usize.pow(games.len() as u32);
        if let Some(c) = (0..total).find_map(|i| compare(one_state_model(&atoms, &games, i))) {
            return Ok(Verdict::Counterexample(Box::new(c)));
        }
    }

    if !(options.density > 0.0 && options.density <= 1.0) {
        return Err(ModelError::Density(options.density).into());
    }
    let found = options.execution.find_map_first(0..options.samples, |i| {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        rng.set_stream(i as u64);
        let n = rand::Rng::gen_range(&mut rng, 1..=options.n_states);
        let model = random_model_with(&mut rng, n, &atoms, &games, options.density).expect("checked parameters");
        compare(model)
    });
    Ok(found.map_or(Verdict::Equivalent, |c| Verdict::Counterexample(Box::new(c))))
}

/// The `index`-th one-state model: atoms read off the low bits, each game
/// then one of the three monotone families on one state.
fn one_state_model(atoms: &[String], games: &[String], index: usize) -> GameModel {
    let mut model = GameModel::with_size(1).expect("one state");
    for (k, a) in atoms.iter().enumerate() {
        let truth = if index >> k & 1 == 1 { StateSet::singleton(0) } else { StateSet::EMPTY };
        model.set_atom(a.clone(), truth).expect("width 1");
    }
    let mut rest = index >> atoms.len();
    for g in games {
        let family = match rest % 3 {
            0 => NbhdFamily::empty(1),
            1 => NbhdFamily::principal(1, StateSet::singleton(0)),
            _ => NbhdFamily::full(1),
        };
        rest /= 3;
        model.set_game(g.clone(), Frame::new(vec![family]).expect("width 1")).expect("width 1");
    }
    model
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn check(a: &str, b: &str) -> Verdict {
        let (a, b) = (parse_formula(a).unwrap(), parse_formula(b).unwrap());
        equiv(Side::Formula(&a), Side::Formula(&b), &EquivOptions::default()).unwrap()
    }

    #[test]
    fn distinct_atoms_differ_on_one_state() {
        let v = check("p", "q");
        let c = v.counterexample().expect("counterexample");
        assert_eq!(c.model.width(), 1);
        assert_ne!(c.left, c.right);
        assert_eq!(v.to_json()["status"], "counterexample");
    }

    #[test]
    fn choice_distributes() {
        let v = check("<g u h>p", "<g>p | <h>p");
        assert!(v.is_equivalent());
        assert_eq!(v.to_json(), json!({"status": "equivalent"}));
        assert!(check("<g n h>p", "<g>p & <h>p").is_equivalent());
        assert!(!check("<g ; h>p", "<h ; g>p").is_equivalent());
    }

    #[test]
    fn deterministic_across_modes() {
        let (a, b) = (parse_formula("<g^*>p").unwrap(), parse_formula("p | <g><g^*>p").unwrap());
        let (c, d) = (parse_formula("<g ; h>p").unwrap(), parse_formula("<h ; g>p").unwrap());
        for (x, y) in [(&a, &b), (&c, &d)] {
            let run = |execution| {
                let o = EquivOptions { n_states: 3, samples: 50, seed: 7, execution, ..EquivOptions::default() };
                equiv(Side::Formula(x), Side::Formula(y), &o).unwrap()
            };
            assert_eq!(run(Execution::Sequential), run(Execution::Parallel));
        }
        assert!(equiv(Side::Formula(&a), Side::Formula(&b), &EquivOptions { n_states: 9, ..Default::default() })
            .is_err());
    }
}
