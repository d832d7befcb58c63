use glw_core::gen::TermGen;
use glw_core::nbhd::{eval_standard, game_denotation, random_model};
use glw_core::syntax::{
    is_dnnf_formula, is_dnnf_game, parse_formula, parse_game, to_dnnf, to_dnnf_game, ParseError,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gen() -> TermGen {
    TermGen { max_depth: 5, ..TermGen::default() }
}

proptest! {
    #[test]
    fn render_then_parse_is_identity(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = gen().formula(&mut rng);
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f.clone());
        let g = gen().game(&mut rng);
        prop_assert_eq!(parse_game(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn dnnf_is_normal_and_idempotent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = gen().formula(&mut rng);
        let d = to_dnnf(&f);
        prop_assert!(is_dnnf_formula(&d));
        prop_assert_eq!(to_dnnf(&d), d.clone());
        if is_dnnf_formula(&f) {
            prop_assert_eq!(d, f);
        }
        let g = gen().game(&mut rng);
        let dg = to_dnnf_game(&g);
        prop_assert!(is_dnnf_game(&dg));
        prop_assert_eq!(to_dnnf_game(&dg), dg);
    }

    #[test]
    fn dnnf_preserves_meaning(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = gen().formula(&mut rng);
        let g = gen().game(&mut rng);
        for k in 0..4 {
            let m = random_model(1 + k as usize, &["p", "q"], &["g", "h"], 0.6, seed ^ k).unwrap();
            prop_assert_eq!(eval_standard(&m, &to_dnnf(&f)), eval_standard(&m, &f));
            prop_assert_eq!(game_denotation(&m, &to_dnnf_game(&g)), game_denotation(&m, &g));
        }
    }
}

#[test]
fn parse_errors_carry_positions() {
    match parse_formula("<g>(p").unwrap_err() {
        ParseError::Syntax { line, column, .. } => assert_eq!((line, column), (1, 6)),
        e => panic!("{e:?}"),
    }
    assert!(matches!(parse_formula("$e"), Err(ParseError::Reserved { .. })));
    assert!(matches!(parse_formula("p # q"), Err(ParseError::Lexical { ch: '#', .. })));
}

#[test]
fn final_example_game_parses() {
    let g = parse_game("(g^* n (p? ; p!))^x").unwrap();
    assert_eq!(g.to_string(), "(g^* n p? ; p!)^x");
    assert!(is_dnnf_game(&g));
}
