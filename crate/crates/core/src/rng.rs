//! Per-run random streams.
//!
//! Every Monte Carlo realization `r` draws from `ChaCha8Rng` seeded with the
//! experiment seed and switched to stream `r`. Streams are independent and
//! fixed by `(seed, r)` alone, so a run produces the same numbers whichever
//! thread executes it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

pub fn run_rng(seed: u64, run_index: u64) -> SimRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(run_index);
    rng
}

/// Generator for one-shot constructions (graph generators).
pub fn seeded_rng(seed: u64) -> SimRng {
    ChaCha8Rng::seed_from_u64(seed)
}
