//! Seeded random syntax graphs and parity arenas.

use glw_core::graph::{Label, SyntaxGraph};
use glw_core::parity::{ParityArena, Player};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A graph with at most `max_vertices` vertices and exit `e`. Priorities
/// are mostly injective and mostly match their connective's parity, so a
/// fair share of heads get past the parity condition.
pub fn random_graph(seed: u64, max_vertices: usize) -> SyntaxGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let mut pool: Vec<u32> = (0..2 * max_vertices as u32).collect();
    pool.shuffle(&mut rng);
    let injective = rng.gen_bool(0.85);
    let mut g = SyntaxGraph { labels: vec![], succ: vec![], priority: vec![], initial: 0, exit: Some("e".into()) };
    for _ in 0..n {
        let label = match rng.gen_range(0..if n >= 2 { 6 } else { 3 }) {
            0 => Label::Lit { atom: ["p", "q", "e"][rng.gen_range(0..3)].into(), neg: rng.gen_bool(0.2) },
            1 | 2 => Label::dia(["g", "h"][rng.gen_range(0..2)], rng.gen_bool(0.3)),
            3 => Label::And,
            _ => Label::Or,
        };
        let succ = match label.arity() {
            0 => vec![],
            1 => vec![rng.gen_range(0..n)],
            _ => {
                let a = rng.gen_range(0..n);
                let b = (a + rng.gen_range(1..n)) % n;
                vec![a, b]
            }
        };
        let priority = if rng.gen_bool(0.45) {
            if !injective {
                Some(rng.gen_range(0..4))
            } else {
                let want = match label {
                    Label::Or => Some(1),
                    Label::And => Some(0),
                    _ => None,
                };
                let pick = pool.iter().position(|p| want.is_none_or(|w| p % 2 == w || rng.gen_bool(0.1)));
                pick.map(|i| pool.remove(i))
            }
        } else {
            None
        };
        g.add_vertex(label, succ, priority);
    }
    g.initial = rng.gen_range(0..n);
    g
}

/// An arena with `1..=max_positions` positions and priorities `0..=max_priority`;
/// some positions are dead ends.
pub fn random_arena(seed: u64, max_positions: usize, max_priority: u32) -> ParityArena {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_positions);
    let mut arena = ParityArena::new();
    for _ in 0..n {
        let owner = if rng.gen_bool(0.5) { Player::Eloise } else { Player::Abelard };
        arena.add_position(owner, rng.gen_range(0..=max_priority));
    }
    for v in 0..n {
        let degree = if rng.gen_bool(0.1) { 0 } else { rng.gen_range(1..=3) };
        for _ in 0..degree {
            arena.add_edge(v, rng.gen_range(0..n));
        }
    }
    arena
}
