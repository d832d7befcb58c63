use super::{ParityArena, ParityError, Player, SolveResult};

/// Checks that each player's strategy wins from every position of that
/// player's region.
///
/// Inside a region, the winner keeps only the strategy move and the loser
/// keeps every move. The check fails if the winner is stuck or has no
/// strategy move, if a move leaves the region, or if some cycle has a
/// top priority of the loser's parity.
pub fn verify_strategy(arena: &ParityArena, result: &SolveResult) -> Result<bool, ParityError> {
    let n = arena.len();
    if result.len() != n {
        return Err(ParityError::Shape { expected: n, found: result.len() });
    }
    for v in 0..n {
        if let Some(t) = result.strategy(v) {
            if !arena.successors(v).contains(&t) {
                return Err(ParityError::NotAMove { position: v, target: t });
            }
        }
    }
    Ok([Player::Eloise, Player::Abelard].into_iter().all(|p| region_holds(arena, result, p)))
}

fn region_holds(arena: &ParityArena, result: &SolveResult, player: Player) -> bool {
    let n = arena.len();
    let in_region: Vec<bool> = (0..n).map(|v| result.winner(v) == player).collect();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in (0..n).filter(|&v| in_region[v]) {
        if arena.owner(v) == player {
            match result.strategy(v) {
                Some(t) => succ[v].push(t),
                None => return false,
            }
        } else {
            succ[v] = arena.successors(v).to_vec();
        }
        // a stuck opponent loses, which is the winner's outcome
        if succ[v].iter().any(|&t| !in_region[t]) {
            return false;
        }
    }
    // a losing cycle through a position of priority q stays below q
    let bad: Vec<usize> = (0..n)
        .filter(|&v| in_region[v] && Player::of_priority(arena.priority(v)) != player)
        .collect();
    bad.into_iter().all(|v| {
        let q = arena.priority(v);
        !returns_to(&succ, v, |u| arena.priority(u) <= q)
    })
}

fn returns_to(succ: &[Vec<usize>], start: usize, allowed: impl Fn(usize) -> bool) -> bool {
    let mut seen = vec![false; succ.len()];
    let mut stack: Vec<usize> = succ[start].iter().copied().filter(|&t| allowed(t)).collect();
    while let Some(u) = stack.pop() {
        if u == start {
            return true;
        }
        if !std::mem::replace(&mut seen[u], true) {
            stack.extend(succ[u].iter().copied().filter(|&t| allowed(t)));
        }
    }
    false
}
