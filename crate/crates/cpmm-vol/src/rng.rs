//! Deterministic RNG streams.
//!
//! Every consumer derives its generator from `(master_seed, stream_index)`,
//! so draws are independent of scheduling and worker count. Stream `k` is
//! the ChaCha stream `k` of the cipher keyed from the master seed, a
//! counter-based split: streams never overlap and can be created in any
//! order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

/// The stream generator used throughout the crate.
pub type StreamRng = ChaCha12Rng;

/// Generator for stream `stream` under `master_seed`.
pub fn stream_rng(master_seed: u64, stream: u64) -> StreamRng {
    let mut rng = ChaCha12Rng::seed_from_u64(master_seed);
    rng.set_stream(stream);
    rng
}

/// One standard normal draw.
pub fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}
