use std::collections::VecDeque;

use super::{ParityArena, Player};

/// Winning regions and positional winning strategies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    winner: Vec<Player>,
    strategy: Vec<Option<usize>>,
}

impl SolveResult {
    pub fn from_parts(winner: Vec<Player>, strategy: Vec<Option<usize>>) -> Self {
        SolveResult { winner, strategy }
    }

    pub fn len(&self) -> usize {
        self.winner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.winner.is_empty()
    }

    pub fn winner(&self, v: usize) -> Player {
        self.winner[v]
    }

    /// The move prescribed at `v`; defined for positions whose owner wins
    /// and can move.
    pub fn strategy(&self, v: usize) -> Option<usize> {
        self.strategy[v]
    }

    pub fn winning_region(&self, player: Player) -> Vec<usize> {
        (0..self.winner.len()).filter(|&v| self.winner[v] == player).collect()
    }

    pub fn wins(&self, player: Player, v: usize) -> bool {
        self.winner[v] == player
    }
}

/// Solves `arena` with Zielonka's recursive algorithm.
///
/// Attractors are computed breadth-first, visiting predecessors in index
/// order, so the strategies depend only on the arena.
pub fn solve(arena: &ParityArena) -> SolveResult {
    let n = arena.len();
    // a stuck position loses for its owner: give it a self-loop whose
    // priority favours the opponent
    let mut succ: Vec<Vec<usize>> = (0..n).map(|v| arena.successors(v).to_vec()).collect();
    let mut priority: Vec<u32> = (0..n).map(|v| arena.priority(v)).collect();
    for v in 0..n {
        if succ[v].is_empty() {
            succ[v].push(v);
            priority[v] = match arena.owner(v) {
                Player::Eloise => 1,
                Player::Abelard => 0,
            };
        }
    }
    let mut pred = vec![Vec::new(); n];
    for (v, s) in succ.iter().enumerate() {
        for &t in s {
            pred[t].push(v);
        }
    }
    let game = Game { owner: (0..n).map(|v| arena.owner(v)).collect(), succ, pred, priority };
    let mut strategy = vec![None; n];
    let all = vec![true; n];
    let win_e = game.zielonka(&all, &mut strategy);

    let winner: Vec<Player> = win_e.iter().map(|&e| if e { Player::Eloise } else { Player::Abelard }).collect();
    for v in 0..n {
        if arena.successors(v).is_empty() || arena.owner(v) != winner[v] {
            strategy[v] = None;
        }
    }
    SolveResult { winner, strategy }
}

struct Game {
    owner: Vec<Player>,
    succ: Vec<Vec<usize>>,
    pred: Vec<Vec<usize>>,
    priority: Vec<u32>,
}

impl Game {
    /// Eloise's winning region inside the subgame `live`, recording both
    /// players' strategies for the positions of `live`.
    fn zielonka(&self, live: &[bool], strategy: &mut [Option<usize>]) -> Vec<bool> {
        let n = live.len();
        let Some(d) = (0..n).filter(|&v| live[v]).map(|v| self.priority[v]).max() else {
            return vec![false; n];
        };
        let me = Player::of_priority(d);
        let top: Vec<bool> = (0..n).map(|v| live[v] && self.priority[v] == d).collect();
        let attr = self.attractor(live, &top, me, strategy);
        for v in 0..n {
            if top[v] && self.owner[v] == me {
                strategy[v] = self.succ[v].iter().copied().find(|&t| live[t]);
            }
        }
        let rest: Vec<bool> = (0..n).map(|v| live[v] && !attr[v]).collect();
        let win_e_rest = self.zielonka(&rest, strategy);
        let other_rest: Vec<bool> =
            (0..n).map(|v| rest[v] && (win_e_rest[v] == (me == Player::Abelard))).collect();

        if !other_rest.iter().any(|&b| b) {
            return live.iter().map(|&l| l && me == Player::Eloise).collect();
        }
        let other = me.opponent();
        let back = self.attractor(live, &other_rest, other, strategy);
        let remaining: Vec<bool> = (0..n).map(|v| live[v] && !back[v]).collect();
        let win_e_rem = self.zielonka(&remaining, strategy);
        (0..n)
            .map(|v| {
                if !live[v] {
                    false
                } else if back[v] {
                    other == Player::Eloise
                } else {
                    win_e_rem[v]
                }
            })
            .collect()
    }

    /// Positions of `live` from which `player` forces a visit to `target`,
    /// recording attractor moves for `player` outside `target`.
    fn attractor(&self, live: &[bool], target: &[bool], player: Player, strategy: &mut [Option<usize>]) -> Vec<bool> {
        let n = live.len();
        let mut attr = target.to_vec();
        let mut escapes: Vec<usize> =
            (0..n).map(|v| if live[v] { self.succ[v].iter().filter(|&&t| live[t]).count() } else { 0 }).collect();
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| target[v]).collect();
        while let Some(t) = queue.pop_front() {
            for &u in &self.pred[t] {
                if !live[u] || attr[u] {
                    continue;
                }
                if self.owner[u] == player {
                    attr[u] = true;
                    strategy[u] = Some(t);
                    queue.push_back(u);
                } else {
                    escapes[u] -= 1;
                    if escapes[u] == 0 {
                        attr[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        attr
    }
}
