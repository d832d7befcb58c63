//! Seeded random formulas and games.

use rand::Rng;

use crate::syntax::{Formula, Game};

#[derive(Clone, Debug)]
pub struct TermGen {
    pub atoms: Vec<String>,
    pub games: Vec<String>,
    pub max_depth: usize,
}

impl Default for TermGen {
    fn default() -> Self {
        TermGen { atoms: vec!["p".into(), "q".into()], games: vec!["g".into(), "h".into()], max_depth: 4 }
    }
}

impl TermGen {
    pub fn formula<R: Rng + ?Sized>(&self, rng: &mut R) -> Formula {
        self.formula_at(rng, self.max_depth)
    }

    pub fn game<R: Rng + ?Sized>(&self, rng: &mut R) -> Game {
        self.game_at(rng, self.max_depth)
    }

    fn formula_at<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Formula {
        let atom = |rng: &mut R| Formula::atom(self.atoms[rng.gen_range(0..self.atoms.len())].clone());
        if depth == 0 || rng.gen_bool(0.2) {
            return atom(rng);
        }
        let d = depth - 1;
        match rng.gen_range(0..5) {
            0 => Formula::neg(self.formula_at(rng, d)),
            1 => Formula::and(self.formula_at(rng, d), self.formula_at(rng, d)),
            2 => Formula::or(self.formula_at(rng, d), self.formula_at(rng, d)),
            _ => Formula::dia(self.game_at(rng, d), self.formula_at(rng, d)),
        }
    }

    fn game_at<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Game {
        let atomic = |rng: &mut R| Game::atomic(self.games[rng.gen_range(0..self.games.len())].clone());
        if depth == 0 || rng.gen_bool(0.2) {
            return atomic(rng);
        }
        let d = depth - 1;
        match rng.gen_range(0..9) {
            0 => Game::dual(self.game_at(rng, d)),
            1 => Game::seq(self.game_at(rng, d), self.game_at(rng, d)),
            2 => Game::cup(self.game_at(rng, d), self.game_at(rng, d)),
            3 => Game::cap(self.game_at(rng, d), self.game_at(rng, d)),
            4 => Game::star(self.game_at(rng, d)),
            5 => Game::cross(self.game_at(rng, d)),
            6 => Game::test(self.formula_at(rng, d.min(1))),
            7 => Game::dual_test(self.formula_at(rng, d.min(1))),
            _ => atomic(rng),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bounded_and_deterministic() {
        let gen = TermGen::default();
        let a: Vec<Formula> = (0..20).map(|i| gen.formula(&mut ChaCha8Rng::seed_from_u64(i))).collect();
        let b: Vec<Formula> = (0..20).map(|i| gen.formula(&mut ChaCha8Rng::seed_from_u64(i))).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|f| f.depth() <= gen.max_depth));
    }
}
