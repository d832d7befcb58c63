//! Fixpoint subterms and parity functions on them.

use std::collections::{BTreeMap, BTreeSet};

use super::{Formula, Game, Term};

/// All `^*` / `^x` subterms of `f`, deduplicated structurally and ordered by
/// size (ties broken by the derived term order).
pub fn fixpoint_subterms(f: &Formula) -> Vec<Game> {
    let mut set = BTreeSet::new();
    walk_formula(f, &mut set);
    order(set)
}

/// As [`fixpoint_subterms`]; a fixpoint term is its own subterm.
pub fn fixpoint_subterms_game(g: &Game) -> Vec<Game> {
    let mut set = BTreeSet::new();
    walk_game(g, &mut set);
    order(set)
}

impl Term {
    pub fn fixpoint_subterms(&self) -> Vec<Game> {
        match self {
            Term::Formula(f) => fixpoint_subterms(f),
            Term::Game(g) => fixpoint_subterms_game(g),
        }
    }
}

fn order(set: BTreeSet<Game>) -> Vec<Game> {
    let mut v: Vec<Game> = set.into_iter().collect();
    // stable sort keeps the BTreeSet order among equal sizes
    v.sort_by_key(Game::size);
    v
}

fn walk_formula(f: &Formula, out: &mut BTreeSet<Game>) {
    match f {
        Formula::Atom(_) => {}
        Formula::Neg(a) => walk_formula(a, out),
        Formula::And(a, b) | Formula::Or(a, b) => {
            walk_formula(a, out);
            walk_formula(b, out);
        }
        Formula::Dia(g, a) => {
            walk_game(g, out);
            walk_formula(a, out);
        }
    }
}

fn walk_game(g: &Game, out: &mut BTreeSet<Game>) {
    match g {
        Game::Atomic(_) => {}
        Game::Star(a) | Game::Cross(a) => {
            if !out.contains(g) {
                out.insert(g.clone());
                walk_game(a, out);
            }
        }
        Game::Dual(a) => walk_game(a, out),
        Game::Seq(a, b) | Game::Cup(a, b) | Game::Cap(a, b) => {
            walk_game(a, out);
            walk_game(b, out);
        }
        Game::Test(f) | Game::DualTest(f) => walk_formula(f, out),
    }
}

impl Game {
    /// `other` occurs in `self` as a proper subterm.
    pub fn has_proper_subterm(&self, other: &Game) -> bool {
        let children: Vec<&Game> = match self {
            Game::Atomic(_) => vec![],
            Game::Dual(a) | Game::Star(a) | Game::Cross(a) => vec![a],
            Game::Seq(a, b) | Game::Cup(a, b) | Game::Cap(a, b) => vec![a, b],
            Game::Test(f) | Game::DualTest(f) => return f.has_game_subterm(other),
        };
        children.into_iter().any(|c| c == other || c.has_proper_subterm(other))
    }
}

impl Formula {
    fn has_game_subterm(&self, other: &Game) -> bool {
        match self {
            Formula::Atom(_) => false,
            Formula::Neg(a) => a.has_game_subterm(other),
            Formula::And(a, b) | Formula::Or(a, b) => a.has_game_subterm(other) || b.has_game_subterm(other),
            Formula::Dia(g, a) => **g == *other || g.has_proper_subterm(other) || a.has_game_subterm(other),
        }
    }
}

/// Priorities of the fixpoint subterms of a formula.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PriorityAssignment {
    map: BTreeMap<Game, u32>,
}

impl PriorityAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, term: Game, priority: u32) {
        self.map.insert(term, priority);
    }

    pub fn get(&self, term: &Game) -> Option<u32> {
        self.map.get(term).copied()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Game, u32)> {
        self.map.iter().map(|(g, p)| (g, *p))
    }

    pub fn max_priority(&self) -> Option<u32> {
        self.map.values().copied().max()
    }

    /// Checks that this is a parity function for `f`: it is defined exactly
    /// on the fixpoint subterms, strictly monotone along the subterm order,
    /// and even exactly on demonic iterations.
    pub fn is_parity_function_for(&self, f: &Formula) -> bool {
        let fix = fixpoint_subterms(f);
        if fix.len() != self.map.len() || fix.iter().any(|t| !self.map.contains_key(t)) {
            return false;
        }
        let parity_ok = self.map.iter().all(|(t, p)| (p % 2 == 0) == matches!(t, Game::Cross(_)));
        let order_ok = fix.iter().all(|outer| {
            fix.iter()
                .filter(|inner| outer.has_proper_subterm(inner))
                .all(|inner| self.map[inner] < self.map[outer])
        });
        parity_ok && order_ok
    }
}

/// `2|Fix(a)|+1` for `a^*` and `2|Fix(a)|` for `a^x`, over every fixpoint
/// subterm of `f`.
pub fn canonical_priorities(f: &Formula) -> PriorityAssignment {
    let mut out = PriorityAssignment::new();
    for t in fixpoint_subterms(f) {
        let n = fixpoint_subterms_game(&t).len() as u32;
        let p = if matches!(t, Game::Star(_)) { 2 * n + 1 } else { 2 * n };
        out.insert(t, p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{parse_formula, parse_game};
    use super::*;

    #[test]
    fn no_fixpoints_in_atom() {
        assert!(fixpoint_subterms(&Formula::atom("p")).is_empty());
        assert!(canonical_priorities(&Formula::atom("p")).is_empty());
    }

    #[test]
    fn nested_subterms_in_size_order() {
        let g = parse_game("(p? ; g^*)^x").unwrap();
        assert_eq!(fixpoint_subterms_game(&g), vec![parse_game("g^*").unwrap(), g.clone()]);
        let star = parse_game("g^*").unwrap();
        assert_eq!(fixpoint_subterms_game(&star), vec![star.clone()]);
    }

    #[test]
    fn canonical_values() {
        let f = parse_formula("<g^*>p").unwrap();
        let pr = canonical_priorities(&f);
        assert_eq!(pr.get(&parse_game("g^*").unwrap()), Some(3));
        assert_eq!(pr.len(), 1);

        let f = parse_formula("<(p? ; g^*)^x>e").unwrap();
        let pr = canonical_priorities(&f);
        assert_eq!(pr.get(&parse_game("g^*").unwrap()), Some(3));
        assert_eq!(pr.get(&parse_game("(p? ; g^*)^x").unwrap()), Some(4));
        assert!(pr.is_parity_function_for(&f));
    }

    #[test]
    fn fixpoints_inside_tests_are_collected() {
        let f = parse_formula("<(<h^x>p)? ; g^*>q").unwrap();
        let fix = fixpoint_subterms(&f);
        assert_eq!(fix.len(), 2);
        assert!(canonical_priorities(&f).is_parity_function_for(&f));
    }

    #[test]
    fn wrong_parity_is_rejected() {
        let f = parse_formula("<g^*>p").unwrap();
        let mut pr = PriorityAssignment::new();
        pr.insert(parse_game("g^*").unwrap(), 2);
        assert!(!pr.is_parity_function_for(&f));
    }
}
