//! Winning regions by enumerating every pair of positional strategies.

use glw_core::parity::{ParityArena, Player};

/// The winner of the play from `v` when every position follows `choice`.
fn play(arena: &ParityArena, choice: &[usize], v: usize) -> Player {
    let mut seen = vec![usize::MAX; arena.len()];
    let mut path = Vec::new();
    let mut u = v;
    loop {
        if arena.successors(u).is_empty() {
            return arena.owner(u).opponent();
        }
        if seen[u] != usize::MAX {
            let top = path[seen[u]..].iter().map(|&w| arena.priority(w)).max().expect("nonempty cycle");
            return Player::of_priority(top);
        }
        seen[u] = path.len();
        path.push(u);
        u = arena.successors(u)[choice[u]];
    }
}

/// Every assignment of a move to each position owned by `player`.
fn profiles(arena: &ParityArena, player: Player) -> Vec<Vec<(usize, usize)>> {
    let mine: Vec<usize> =
        (0..arena.len()).filter(|&v| arena.owner(v) == player && !arena.successors(v).is_empty()).collect();
    let mut out = vec![vec![]];
    for v in mine {
        out = out
            .into_iter()
            .flat_map(|p: Vec<(usize, usize)>| {
                (0..arena.successors(v).len()).map(move |i| {
                    let mut q = p.clone();
                    q.push((v, i));
                    q
                })
            })
            .collect();
    }
    out
}

/// Eloise wins `v` iff some strategy of hers beats every strategy of his.
pub fn brute_force_winners(arena: &ParityArena) -> Vec<Player> {
    let eloise = profiles(arena, Player::Eloise);
    let abelard = profiles(arena, Player::Abelard);
    let mut winner = vec![Player::Abelard; arena.len()];
    for e in &eloise {
        let mut choice = vec![0; arena.len()];
        for &(v, i) in e {
            choice[v] = i;
        }
        let mut beats_all = vec![true; arena.len()];
        for a in &abelard {
            for &(v, i) in a {
                choice[v] = i;
            }
            for v in 0..arena.len() {
                if beats_all[v] && play(arena, &choice, v) == Player::Abelard {
                    beats_all[v] = false;
                }
            }
        }
        for v in 0..arena.len() {
            if beats_all[v] {
                winner[v] = Player::Eloise;
            }
        }
    }
    winner
}
