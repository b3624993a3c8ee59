//! Reproducible random number generation.
//!
//! Every stochastic routine in the crate takes an explicit seed and derives
//! its generator through [`stream_rng`], so runs are bit-reproducible and
//! independent streams can be drawn for parallel trials.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 step; the standard 64-bit finalizer.
#[inline]
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Hashes a sequence of words into a single 64-bit seed.
pub fn mix_seed(parts: &[u64]) -> u64 {
    let mut state = 0x243F_6A88_85A3_08D3; // arbitrary fixed salt
    let mut acc = 0u64;
    for &p in parts {
        state ^= p;
        acc ^= splitmix64(&mut state);
    }
    acc ^ splitmix64(&mut state)
}

/// A deterministic generator for stream `stream` of master seed `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: u64 = stream_rng(7, 0).gen();
        let b: u64 = stream_rng(7, 0).gen();
        let c: u64 = stream_rng(7, 1).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn mix_seed_distinguishes_order() {
        assert_ne!(mix_seed(&[1, 2]), mix_seed(&[2, 1]));
        assert_eq!(mix_seed(&[3, 4, 5]), mix_seed(&[3, 4, 5]));
    }
}
