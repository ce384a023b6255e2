//! Counter-based sample generator for reproducible random sweeps.
//!
//! Sample `i` of stream `s` under seed `seed` is
//! `splitmix64(seed + (s * 2^32 + i + 1) * 0x9E3779B97F4A7C15)` with wrapping
//! 64-bit arithmetic, where `splitmix64` is the standard SplitMix64 output
//! mix. Any implementation of that formula reproduces the same samples, and
//! samples can be drawn in any order or in parallel.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn splitmix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CounterRng {
    seed: u64,
    stream: u64,
}

impl CounterRng {
    pub fn new(seed: u64) -> Self {
        CounterRng { seed, stream: 0 }
    }

    /// An independent stream under the same seed.
    pub fn stream(self, stream: u32) -> Self {
        CounterRng {
            seed: self.seed,
            stream: stream as u64,
        }
    }

    pub fn u64_at(&self, index: u64) -> u64 {
        let counter = (self.stream << 32).wrapping_add(index).wrapping_add(1);
        splitmix64(self.seed.wrapping_add(counter.wrapping_mul(GOLDEN)))
    }

    /// Uniform-ish value in `[0, bound)` by reduction modulo `bound`.
    pub fn below(&self, index: u64, bound: u64) -> u64 {
        assert!(bound > 0);
        self.u64_at(index) % bound
    }
}
