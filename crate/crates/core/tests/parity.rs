mod support;

use glw_core::parity::{read_arena, solve, verify_strategy, write_arena, ParityArena, Player};
use proptest::prelude::*;
use support::arb::random_arena;
use support::brute::brute_force_winners;

proptest! {
    #[test]
    fn regions_partition_and_strategies_verify(seed in any::<u64>()) {
        let arena = random_arena(seed, 12, 4);
        let r = solve(&arena);
        let e = r.winning_region(Player::Eloise);
        let a = r.winning_region(Player::Abelard);
        prop_assert_eq!(e.len() + a.len(), arena.len());
        prop_assert!(e.iter().all(|v| !a.contains(v)));
        prop_assert!(verify_strategy(&arena, &r).unwrap());
    }

    #[test]
    fn matches_brute_force(seed in any::<u64>()) {
        let arena = random_arena(seed, 7, 4);
        let r = solve(&arena);
        let want = brute_force_winners(&arena);
        for v in 0..arena.len() {
            prop_assert_eq!(r.winner(v), want[v], "position {}", v);
        }
    }

    #[test]
    fn arena_json_roundtrips(seed in any::<u64>()) {
        let arena = random_arena(seed, 12, 4);
        let (back, ids) = read_arena(&write_arena(&arena)).unwrap();
        prop_assert_eq!(ids, (0..arena.len() as i64).collect::<Vec<_>>());
        prop_assert_eq!(back, arena);
    }
}

#[test]
fn dead_ends_lose_for_their_owner() {
    let mut a = ParityArena::new();
    let e = a.add_position(Player::Eloise, 0);
    let b = a.add_position(Player::Abelard, 1);
    let r = solve(&a);
    assert_eq!((r.winner(e), r.winner(b)), (Player::Abelard, Player::Eloise));
    assert_eq!((r.strategy(e), r.strategy(b)), (None, None));
}

#[test]
fn odd_cycle_goes_to_abelard() {
    let mut a = ParityArena::new();
    let x = a.add_position(Player::Eloise, 3);
    let y = a.add_position(Player::Eloise, 2);
    a.add_edge(x, y);
    a.add_edge(y, x);
    a.add_edge(y, y);
    let r = solve(&a);
    assert_eq!(r.winner(x), Player::Eloise);
    assert_eq!(r.strategy(y), Some(y));
    assert!(verify_strategy(&a, &r).unwrap());
}
