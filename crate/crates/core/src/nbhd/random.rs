use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Frame, GameModel, ModelError, NbhdFamily, StateSet, MAX_STATES};

pub const DEFAULT_DENSITY: f64 = 0.6;

/// A random model on states `s0 .. s{n-1}`, deterministic in `seed`.
pub fn random_model<A, G>(n: usize, atoms: &[A], games: &[G], density: f64, seed: u64) -> Result<GameModel, ModelError>
where
    A: AsRef<str>,
    G: AsRef<str>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_model_with(&mut rng, n, atoms, games, density)
}

pub fn random_model_with<R, A, G>(
    rng: &mut R,
    n: usize,
    atoms: &[A],
    games: &[G],
    density: f64,
) -> Result<GameModel, ModelError>
where
    R: Rng + ?Sized,
    A: AsRef<str>,
    G: AsRef<str>,
{
    if n == 0 || n > MAX_STATES {
        return Err(if n == 0 { ModelError::NoStates } else { ModelError::TooManyStates(n) });
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(ModelError::Density(density));
    }
    let mut model = GameModel::with_size(n)?;
    for a in atoms {
        let truth = StateSet::from_states((0..n).filter(|_| rng.gen_bool(0.5)));
        model.set_atom(a.as_ref(), truth)?;
    }
    for g in games {
        let frame = random_frame_with(rng, n, density);
        model.set_game(g.as_ref(), frame)?;
    }
    Ok(model)
}

/// A frame whose family at each state is generated by `⌈density·n⌉`
/// uniformly sampled subsets.
pub fn random_frame_with<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Frame {
    let k = (density * n as f64).ceil() as usize;
    Frame::from_fn(n, |_| NbhdFamily::from_sets(n, (0..k).map(|_| StateSet(rng.gen_range(0..1u32 << n)))))
}
