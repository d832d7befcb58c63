//! JSON form of game models.
//!
//! ```json
//! {"states": ["s0", "s1"],
//!  "props": {"p": ["s1"]},
//!  "games": {"g": {"s0": [["s1"]], "s1": [["s1"]]}}}
//! ```
//!
//! Inner lists are the minimal neighbourhoods; states left out of a game
//! get the empty family.

use std::collections::BTreeMap;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::{Frame, GameModel, ModelError, NbhdFamily, StateSet};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    states: Vec<String>,
    #[serde(default)]
    props: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    games: BTreeMap<String, IndexMap<String, Vec<Vec<String>>>>,
}

/// A model read from JSON, with notes about normalization applied.
#[derive(Clone, Debug)]
pub struct ReadModel {
    pub model: GameModel,
    pub warnings: Vec<String>,
}

pub fn read_model(bytes: &[u8]) -> Result<ReadModel, ModelError> {
    let doc: ModelDoc = serde_json::from_slice(bytes).map_err(|e| ModelError::Json(e.to_string()))?;
    let mut model = GameModel::new(doc.states)?;
    let n = model.width();
    let mut warnings = Vec::new();

    let lookup = |model: &GameModel, names: &[String]| -> Result<StateSet, ModelError> {
        names.iter().try_fold(StateSet::EMPTY, |acc, name| {
            model.state_index(name).map(|i| acc.with(i)).ok_or_else(|| ModelError::UnknownState(name.clone()))
        })
    };

    for (atom, names) in &doc.props {
        let set = lookup(&model, names)?;
        model.set_atom(atom.clone(), set)?;
    }
    for (game, per_state) in &doc.games {
        let mut families = vec![NbhdFamily::empty(n); n];
        for (state, nbhds) in per_state {
            let s = model.state_index(state).ok_or_else(|| ModelError::UnknownState(state.clone()))?;
            let sets = nbhds.iter().map(|u| lookup(&model, u)).collect::<Result<Vec<_>, _>>()?;
            let family = NbhdFamily::from_sets(n, sets.iter().copied());
            if family.antichain().len() != nbhds.len() {
                warnings.push(format!("game `{game}` at state `{state}`: neighbourhood list minimized"));
            }
            families[s] = family;
        }
        model.set_game(game.clone(), Frame::new(families)?)?;
    }
    Ok(ReadModel { model, warnings })
}

/// Canonical JSON: every state listed for every game, neighbourhoods in
/// antichain order, states inside a set in model order.
pub fn write_model(model: &GameModel) -> Vec<u8> {
    let names = |set: StateSet| model.set_names(set).into_iter().map(String::from).collect::<Vec<_>>();
    let doc = ModelDoc {
        states: model.states().to_vec(),
        props: model.valuation().iter().map(|(a, set)| (a.clone(), names(*set))).collect(),
        games: model
            .games()
            .iter()
            .map(|(g, frame)| {
                let per_state = model
                    .states()
                    .iter()
                    .enumerate()
                    .map(|(s, name)| (name.clone(), frame.family(s).antichain().iter().map(|u| names(*u)).collect()))
                    .collect();
                (g.clone(), per_state)
            })
            .collect(),
    };
    let mut out = serde_json::to_vec_pretty(&doc).expect("model documents serialize");
    out.push(b'\n');
    out
}
