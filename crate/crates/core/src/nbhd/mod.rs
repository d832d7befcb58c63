//! Finite monotone neighbourhood models and their game algebra.

mod family;
mod frame;
mod io;
mod model;
mod random;
mod set;

pub use family::NbhdFamily;
pub use frame::{Frame, FrameOp};
pub use io::{read_model, write_model, ReadModel};
pub use model::{eval_standard, game_denotation, GameModel};
pub use random::{random_frame_with, random_model, random_model_with, DEFAULT_DENSITY};
pub use set::{StateSet, MAX_STATES};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("width mismatch: expected {expected} states, found {found}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("`{op:?}` takes {expected} operands, got {found}")]
    Arity { op: FrameOp, expected: usize, found: usize },
    #[error("a model needs at least one state")]
    NoStates,
    #[error("{0} states exceed the limit of {MAX_STATES}")]
    TooManyStates(usize),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("atom `{0}` is not in the model")]
    UnknownAtom(String),
    #[error("game `{0}` is not in the model")]
    UnknownGame(String),
    #[error("density {0} outside (0, 1]")]
    Density(f64),
    #[error("invalid model JSON: {0}")]
    Json(String),
}
