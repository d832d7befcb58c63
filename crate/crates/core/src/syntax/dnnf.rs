//! Dual and negation normal form: dual only on atomic games, negation only
//! on proposition letters.

use super::{Formula, Game, Term};

pub fn to_dnnf(f: &Formula) -> Formula {
    formula(f, false)
}

pub fn to_dnnf_game(g: &Game) -> Game {
    game(g, false)
}

impl Term {
    pub fn to_dnnf(&self) -> Term {
        match self {
            Term::Formula(f) => Term::Formula(to_dnnf(f)),
            Term::Game(g) => Term::Game(to_dnnf_game(g)),
        }
    }

    pub fn is_dnnf(&self) -> bool {
        match self {
            Term::Formula(f) => is_dnnf_formula(f),
            Term::Game(g) => is_dnnf_game(g),
        }
    }
}

/// Normal form of `f`, or of `!f` when `negated`.
fn formula(f: &Formula, negated: bool) -> Formula {
    match (f, negated) {
        (Formula::Atom(_), false) => f.clone(),
        (Formula::Atom(_), true) => Formula::neg(f.clone()),
        (Formula::Neg(sub), n) => formula(sub, !n),
        (Formula::And(a, b), false) => Formula::and(formula(a, false), formula(b, false)),
        (Formula::And(a, b), true) => Formula::or(formula(a, true), formula(b, true)),
        (Formula::Or(a, b), false) => Formula::or(formula(a, false), formula(b, false)),
        (Formula::Or(a, b), true) => Formula::and(formula(a, true), formula(b, true)),
        // !<a>f == <a^d>!f
        (Formula::Dia(g, sub), n) => Formula::dia(game(g, n), formula(sub, n)),
    }
}

/// Normal form of `g`, or of `g^d` when `dualized`.
fn game(g: &Game, dualized: bool) -> Game {
    match (g, dualized) {
        (Game::Atomic(_), false) => g.clone(),
        (Game::Atomic(_), true) => Game::dual(g.clone()),
        (Game::Dual(sub), d) => game(sub, !d),
        (Game::Seq(a, b), d) => Game::seq(game(a, d), game(b, d)),
        (Game::Cup(a, b), false) => Game::cup(game(a, false), game(b, false)),
        (Game::Cup(a, b), true) => Game::cap(game(a, true), game(b, true)),
        (Game::Cap(a, b), false) => Game::cap(game(a, false), game(b, false)),
        (Game::Cap(a, b), true) => Game::cup(game(a, true), game(b, true)),
        (Game::Star(sub), false) => Game::star(game(sub, false)),
        (Game::Star(sub), true) => Game::cross(game(sub, true)),
        (Game::Cross(sub), false) => Game::cross(game(sub, false)),
        (Game::Cross(sub), true) => Game::star(game(sub, true)),
        (Game::Test(f), false) => Game::test(formula(f, false)),
        (Game::Test(f), true) => Game::dual_test(formula(f, true)),
        (Game::DualTest(f), false) => Game::dual_test(formula(f, false)),
        (Game::DualTest(f), true) => Game::test(formula(f, true)),
    }
}

pub fn is_dnnf_formula(f: &Formula) -> bool {
    match f {
        Formula::Atom(_) => true,
        Formula::Neg(sub) => matches!(**sub, Formula::Atom(_)),
        Formula::And(a, b) | Formula::Or(a, b) => is_dnnf_formula(a) && is_dnnf_formula(b),
        Formula::Dia(g, sub) => is_dnnf_game(g) && is_dnnf_formula(sub),
    }
}

pub fn is_dnnf_game(g: &Game) -> bool {
    match g {
        Game::Atomic(_) => true,
        Game::Dual(sub) => matches!(**sub, Game::Atomic(_)),
        Game::Seq(a, b) | Game::Cup(a, b) | Game::Cap(a, b) => is_dnnf_game(a) && is_dnnf_game(b),
        Game::Star(sub) | Game::Cross(sub) => is_dnnf_game(sub),
        Game::Test(f) | Game::DualTest(f) => is_dnnf_formula(f),
    }
}
