use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Seeded coloring in which the color of `n` depends only on
/// `(seed, palette, n)`: it is drawn from the `n`-th 64-bit output of a
/// ChaCha8 stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomColoring {
    seed: u64,
    palette: u8,
}

impl RandomColoring {
    pub fn new(seed: u64, palette: u8) -> Self {
        RandomColoring { seed, palette }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn stream_at(&self, n: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        // each u64 output consumes two 32-bit words
        rng.set_word_pos(2 * n as u128);
        rng
    }

    fn map(&self, v: u64) -> u8 {
        (v % self.palette as u64) as u8 + 1
    }

    pub fn color(&self, n: u64) -> u8 {
        let mut rng = self.stream_at(n);
        self.map(rng.next_u64())
    }

    pub fn fill(&self, start: u64, out: &mut [u8]) {
        let mut rng = self.stream_at(start);
        for slot in out {
            *slot = self.map(rng.next_u64());
        }
    }
}
