//! Game logic graphs: the structural conditions, compilation from terms,
//! extraction back to terms, and sampled equivalence.

mod check;
mod compile;
mod equiv;
mod extract;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::ValidationReport;

pub use check::{
    check_glg, exit_violation, leaving_cycles_violation, no_remain_violation, Branches, Condition, GlgReport,
    HeadRecord, Violation,
};
pub use compile::{compile_formula, compile_game};
pub use equiv::{equiv, Counterexample, EquivError, EquivOptions, Side, Verdict, MAX_EQUIV_STATES};
pub use extract::{extract_formula, extract_game, FALLBACK_TAUTOLOGY_ATOM};

#[derive(Clone, Debug, PartialEq, Error)]
pub enum GlgError {
    #[error("not in dual and negation normal form: {0}")]
    NotDnnf(String),
    #[error("exit letter `{0}` occurs in the game")]
    ExitInGame(String),
    #[error("graph has no exit letter")]
    MissingExit,
    #[error("graph is not a valid syntax graph")]
    InvalidGraph(Box<ValidationReport>),
    #[error("graph is not a game logic graph")]
    NotGlg(Box<GlgReport>),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

/// The first of `prefix0`, `prefix1`, ... not in `taken`; it is added.
pub(crate) fn fresh_name(prefix: &str, taken: &mut BTreeSet<String>) -> String {
    let name = (0..).map(|k| format!("{prefix}{k}")).find(|n| !taken.contains(n)).expect("unbounded");
    taken.insert(name.clone());
    name
}
