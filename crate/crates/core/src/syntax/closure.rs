use indexmap::IndexSet;

use super::{Formula, Game};

/// One row of the evaluation-game board, seen from a formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Literal { atom: String, negated: bool },
    And(Formula, Formula),
    Or(Formula, Formula),
    /// `<g>f` or `<g^d>f` with `g` atomic.
    Modal { game: String, dual: bool, sub: Formula },
    /// Rows with exactly one move.
    Unfold(Formula),
}

/// The board row for `f`; `None` when `f` is not in DNNF at its root.
pub(crate) fn step(f: &Formula) -> Option<Step> {
    Some(match f {
        Formula::Atom(p) => Step::Literal { atom: p.clone(), negated: false },
        Formula::Neg(sub) => match &**sub {
            Formula::Atom(p) => Step::Literal { atom: p.clone(), negated: true },
            _ => return None,
        },
        Formula::And(a, b) => Step::And((**a).clone(), (**b).clone()),
        Formula::Or(a, b) => Step::Or((**a).clone(), (**b).clone()),
        Formula::Dia(g, sub) => {
            let sub = (**sub).clone();
            match &**g {
                Game::Atomic(name) => Step::Modal { game: name.clone(), dual: false, sub },
                Game::Dual(inner) => match &**inner {
                    Game::Atomic(name) => Step::Modal { game: name.clone(), dual: true, sub },
                    _ => return None,
                },
                Game::Seq(a, b) => Step::Unfold(Formula::dia((**a).clone(), Formula::dia((**b).clone(), sub))),
                Game::Cup(a, b) => Step::Unfold(Formula::or(
                    Formula::dia((**a).clone(), sub.clone()),
                    Formula::dia((**b).clone(), sub),
                )),
                Game::Cap(a, b) => Step::Unfold(Formula::and(
                    Formula::dia((**a).clone(), sub.clone()),
                    Formula::dia((**b).clone(), sub),
                )),
                Game::Star(a) => {
                    let again = Formula::dia((**a).clone(), f.clone());
                    Step::Unfold(Formula::or(sub, again))
                }
                Game::Cross(a) => {
                    let again = Formula::dia((**a).clone(), f.clone());
                    Step::Unfold(Formula::and(sub, again))
                }
                Game::Test(psi) => Step::Unfold(Formula::and((**psi).clone(), sub)),
                Game::DualTest(psi) => Step::Unfold(Formula::or((**psi).clone(), sub)),
            }
        }
    })
}

impl Step {
    pub(crate) fn successors(&self) -> Vec<&Formula> {
        match self {
            Step::Literal { .. } => vec![],
            Step::And(a, b) | Step::Or(a, b) => vec![a, b],
            Step::Modal { sub, .. } => vec![sub],
            Step::Unfold(next) => vec![next],
        }
    }
}

/// Smallest set containing `f` and closed under the evaluation-game moves,
/// in breadth-first discovery order. Formulas not in DNNF contribute no
/// successors.
pub fn eval_closure(f: &Formula) -> IndexSet<Formula> {
    let mut seen = IndexSet::new();
    seen.insert(f.clone());
    let mut i = 0;
    while i < seen.len() {
        let current = seen[i].clone();
        if let Some(st) = step(&current) {
            for next in st.successors() {
                if !seen.contains(next) {
                    seen.insert(next.clone());
                }
            }
        }
        i += 1;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::super::parse_formula;
    use super::*;

    fn f(t: &str) -> Formula {
        parse_formula(t).unwrap()
    }

    #[test]
    fn literal_closure() {
        let c = eval_closure(&f("p"));
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn star_unfolds_once() {
        let c = eval_closure(&f("<g^*>p"));
        let expected: IndexSet<Formula> =
            ["<g^*>p", "p | <g><g^*>p", "p", "<g><g^*>p"].iter().map(|t| f(t)).collect();
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|x| expected.contains(x)));
    }

    #[test]
    fn test_contributes_conjunction() {
        let c = eval_closure(&f("<(<g>q)?>p"));
        for t in ["<(<g>q)?>p", "<g>q & p", "<g>q", "q", "p"] {
            assert!(c.contains(&f(t)), "missing {t}");
        }
        assert_eq!(c.len(), 5);
    }

    #[test]
    fn nested_fixpoints_stay_finite() {
        let c = eval_closure(&f("<((g^* ; h)^x u p?)^*>(q & <g^d>!p)"));
        assert!(c.len() < 40, "{}", c.len());
    }
}
