//! Canonical rendering. Output reparses to a structurally equal term.

use std::fmt::{self, Display, Formatter, Write};

use super::{Formula, Game, Term};

// Formula levels: 0 disjunction, 1 conjunction, 2 unary.
// Game levels: 0 choice, 1 sequence, 2 postfix/base.

fn formula_at(f: &Formula, level: u8, out: &mut Formatter<'_>) -> fmt::Result {
    let own = match f {
        Formula::Or(..) => 0,
        Formula::And(..) => 1,
        _ => 2,
    };
    let paren = own < level;
    if paren {
        out.write_char('(')?;
    }
    match f {
        Formula::Atom(p) => out.write_str(p)?,
        Formula::Neg(sub) => {
            out.write_char('!')?;
            formula_at(sub, 2, out)?;
        }
        Formula::Or(a, b) => {
            formula_at(a, 0, out)?;
            out.write_str(" | ")?;
            formula_at(b, 1, out)?;
        }
        Formula::And(a, b) => {
            formula_at(a, 1, out)?;
            out.write_str(" & ")?;
            formula_at(b, 2, out)?;
        }
        Formula::Dia(g, sub) => {
            out.write_char('<')?;
            game_at(g, 0, out)?;
            out.write_char('>')?;
            formula_at(sub, 2, out)?;
        }
    }
    if paren {
        out.write_char(')')?;
    }
    Ok(())
}

fn test_operand(f: &Formula, out: &mut Formatter<'_>) -> fmt::Result {
    match f {
        Formula::Atom(p) => out.write_str(p),
        other => {
            out.write_char('(')?;
            formula_at(other, 0, out)?;
            out.write_char(')')
        }
    }
}

fn game_at(g: &Game, level: u8, out: &mut Formatter<'_>) -> fmt::Result {
    let own = match g {
        Game::Cup(..) | Game::Cap(..) => 0,
        Game::Seq(..) => 1,
        _ => 2,
    };
    let paren = own < level;
    if paren {
        out.write_char('(')?;
    }
    match g {
        Game::Atomic(name) => out.write_str(name)?,
        Game::Cup(a, b) | Game::Cap(a, b) => {
            game_at(a, 0, out)?;
            out.write_str(if matches!(g, Game::Cup(..)) { " u " } else { " n " })?;
            game_at(b, 1, out)?;
        }
        Game::Seq(a, b) => {
            game_at(a, 1, out)?;
            out.write_str(" ; ")?;
            game_at(b, 2, out)?;
        }
        Game::Dual(sub) | Game::Star(sub) | Game::Cross(sub) => {
            game_at(sub, 2, out)?;
            out.write_str(match g {
                Game::Dual(_) => "^d",
                Game::Star(_) => "^*",
                _ => "^x",
            })?;
        }
        Game::Test(f) => {
            test_operand(f, out)?;
            out.write_char('?')?;
        }
        Game::DualTest(f) => {
            test_operand(f, out)?;
            out.write_char('!')?;
        }
    }
    if paren {
        out.write_char(')')?;
    }
    Ok(())
}

impl Display for Formula {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        formula_at(self, 0, f)
    }
}

impl Display for Game {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        game_at(self, 0, f)
    }
}

impl Display for Term {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            Term::Formula(x) => x.fmt(f),
            Term::Game(x) => x.fmt(f),
        }
    }
}
