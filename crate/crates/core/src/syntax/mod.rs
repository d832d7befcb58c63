//! Formulas and game terms of game logic.
//!
//! The two term sorts are mutually recursive: formulas embed games through
//! the diamond modality, games embed formulas through tests.

pub(crate) mod closure;
mod dnnf;
mod fix;
mod parse;
mod render;

use std::collections::BTreeSet;

pub use closure::eval_closure;
pub use dnnf::{is_dnnf_formula, is_dnnf_game, to_dnnf, to_dnnf_game};
pub use fix::{canonical_priorities, fixpoint_subterms, fixpoint_subterms_game, PriorityAssignment};
pub use parse::{parse_formula, parse_formula_with, parse_game, parse_game_with, ParseError, ParseOptions};

/// Prefix of identifiers reserved for machine-generated names.
pub const RESERVED_PREFIX: char = '$';

pub fn is_reserved(name: &str) -> bool {
    name.starts_with(RESERVED_PREFIX)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Neg(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Dia(Box<Game>, Box<Formula>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Game {
    Atomic(String),
    Dual(Box<Game>),
    Seq(Box<Game>, Box<Game>),
    /// Angelic choice.
    Cup(Box<Game>, Box<Game>),
    /// Demonic choice.
    Cap(Box<Game>, Box<Game>),
    /// Angelic iteration.
    Star(Box<Game>),
    /// Demonic iteration.
    Cross(Box<Game>),
    Test(Box<Formula>),
    DualTest(Box<Formula>),
}

/// Either sort of term, for operations defined uniformly on both.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Formula(Formula),
    Game(Game),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn neg(sub: Formula) -> Self {
        Formula::Neg(Box::new(sub))
    }

    pub fn and(left: Formula, right: Formula) -> Self {
        Formula::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Formula, right: Formula) -> Self {
        Formula::Or(Box::new(left), Box::new(right))
    }

    pub fn dia(game: Game, sub: Formula) -> Self {
        Formula::Dia(Box::new(game), Box::new(sub))
    }

    /// `p | !p`.
    pub fn tautology(atom: impl Into<String>) -> Self {
        let name = atom.into();
        Formula::or(Formula::Atom(name.clone()), Formula::neg(Formula::Atom(name)))
    }

    /// Number of nodes, counting nodes of embedded games.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Neg(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.size() + b.size(),
            Formula::Dia(g, f) => 1 + g.size() + f.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) => 0,
            Formula::Neg(f) => 1 + f.depth(),
            Formula::And(a, b) | Formula::Or(a, b) => 1 + a.depth().max(b.depth()),
            Formula::Dia(g, f) => 1 + g.depth().max(f.depth()),
        }
    }

    /// Proposition letters occurring anywhere in the formula.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect_formula(self, &mut out, &mut BTreeSet::new());
        out
    }

    /// Atomic games occurring anywhere in the formula.
    pub fn games(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect_formula(self, &mut BTreeSet::new(), &mut out);
        out
    }
}

impl Game {
    pub fn atomic(name: impl Into<String>) -> Self {
        Game::Atomic(name.into())
    }

    pub fn dual(sub: Game) -> Self {
        Game::Dual(Box::new(sub))
    }

    pub fn seq(left: Game, right: Game) -> Self {
        Game::Seq(Box::new(left), Box::new(right))
    }

    pub fn cup(left: Game, right: Game) -> Self {
        Game::Cup(Box::new(left), Box::new(right))
    }

    pub fn cap(left: Game, right: Game) -> Self {
        Game::Cap(Box::new(left), Box::new(right))
    }

    pub fn star(sub: Game) -> Self {
        Game::Star(Box::new(sub))
    }

    pub fn cross(sub: Game) -> Self {
        Game::Cross(Box::new(sub))
    }

    pub fn test(formula: Formula) -> Self {
        Game::Test(Box::new(formula))
    }

    pub fn dual_test(formula: Formula) -> Self {
        Game::DualTest(Box::new(formula))
    }

    pub fn is_fixpoint(&self) -> bool {
        matches!(self, Game::Star(_) | Game::Cross(_))
    }

    pub fn size(&self) -> usize {
        match self {
            Game::Atomic(_) => 1,
            Game::Dual(g) | Game::Star(g) | Game::Cross(g) => 1 + g.size(),
            Game::Seq(a, b) | Game::Cup(a, b) | Game::Cap(a, b) => 1 + a.size() + b.size(),
            Game::Test(f) | Game::DualTest(f) => 1 + f.size(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Game::Atomic(_) => 0,
            Game::Dual(g) | Game::Star(g) | Game::Cross(g) => 1 + g.depth(),
            Game::Seq(a, b) | Game::Cup(a, b) | Game::Cap(a, b) => 1 + a.depth().max(b.depth()),
            Game::Test(f) | Game::DualTest(f) => 1 + f.depth(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect_game(self, &mut out, &mut BTreeSet::new());
        out
    }

    pub fn games(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        collect_game(self, &mut BTreeSet::new(), &mut out);
        out
    }

    /// Replaces every occurrence of the atomic game `name` by `with`.
    pub fn substitute(&self, name: &str, with: &Game) -> Game {
        match self {
            Game::Atomic(n) if n == name => with.clone(),
            Game::Atomic(_) => self.clone(),
            Game::Dual(g) => Game::dual(g.substitute(name, with)),
            Game::Seq(a, b) => Game::seq(a.substitute(name, with), b.substitute(name, with)),
            Game::Cup(a, b) => Game::cup(a.substitute(name, with), b.substitute(name, with)),
            Game::Cap(a, b) => Game::cap(a.substitute(name, with), b.substitute(name, with)),
            Game::Star(g) => Game::star(g.substitute(name, with)),
            Game::Cross(g) => Game::cross(g.substitute(name, with)),
            Game::Test(f) => Game::test(f.substitute_game(name, with)),
            Game::DualTest(f) => Game::dual_test(f.substitute_game(name, with)),
        }
    }
}

impl Formula {
    /// Replaces every occurrence of the atomic game `name` by `with`.
    pub fn substitute_game(&self, name: &str, with: &Game) -> Formula {
        match self {
            Formula::Atom(_) => self.clone(),
            Formula::Neg(f) => Formula::neg(f.substitute_game(name, with)),
            Formula::And(a, b) => Formula::and(a.substitute_game(name, with), b.substitute_game(name, with)),
            Formula::Or(a, b) => Formula::or(a.substitute_game(name, with), b.substitute_game(name, with)),
            Formula::Dia(g, f) => Formula::dia(g.substitute(name, with), f.substitute_game(name, with)),
        }
    }
}

fn collect_formula(f: &Formula, atoms: &mut BTreeSet<String>, games: &mut BTreeSet<String>) {
    match f {
        Formula::Atom(p) => {
            atoms.insert(p.clone());
        }
        Formula::Neg(g) => collect_formula(g, atoms, games),
        Formula::And(a, b) | Formula::Or(a, b) => {
            collect_formula(a, atoms, games);
            collect_formula(b, atoms, games);
        }
        Formula::Dia(g, f) => {
            collect_game(g, atoms, games);
            collect_formula(f, atoms, games);
        }
    }
}

fn collect_game(g: &Game, atoms: &mut BTreeSet<String>, games: &mut BTreeSet<String>) {
    match g {
        Game::Atomic(name) => {
            games.insert(name.clone());
        }
        Game::Dual(a) | Game::Star(a) | Game::Cross(a) => collect_game(a, atoms, games),
        Game::Seq(a, b) | Game::Cup(a, b) | Game::Cap(a, b) => {
            collect_game(a, atoms, games);
            collect_game(b, atoms, games);
        }
        Game::Test(f) | Game::DualTest(f) => collect_formula(f, atoms, games),
    }
}

impl From<Formula> for Term {
    fn from(f: Formula) -> Self {
        Term::Formula(f)
    }
}

impl From<Game> for Term {
    fn from(g: Game) -> Self {
        Term::Game(g)
    }
}
