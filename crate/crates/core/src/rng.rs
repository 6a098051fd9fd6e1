//! Reproducible random streams.
//!
//! Every experiment derives all of its randomness from one master seed. Each
//! `(run, slot, role)` triple selects an independent ChaCha stream for the
//! same key, so adding a method to an experiment does not perturb the random
//! draws seen by the others.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type SimRng = ChaCha8Rng;

/// What a stream is used for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Role {
    /// Ranker subsets and query draws.
    Sampling = 0,
    /// Multileaved list construction.
    Construction = 1,
    /// Simulated user clicks.
    Clicks = 2,
    /// Monte Carlo credit estimation.
    Credit = 3,
    /// Train/test split.
    Split = 4,
}

/// Stream for `role` of method slot `slot` in run `run`.
pub fn substream(master_seed: u64, run: u32, slot: u8, role: Role) -> SimRng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(((run as u64) << 16) | ((slot as u64) << 8) | role as u64);
    rng
}
