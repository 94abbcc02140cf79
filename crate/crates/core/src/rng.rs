use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded random source addressed by `(seed, stream)`.
///
/// The same pair always replays the same draws. Distinct stream ids select
/// independent ChaCha streams under one key, which is how parallel trials
/// get their own randomness without coordinating.
#[derive(Debug, Clone)]
pub struct StreamRng {
    inner: ChaCha8Rng,
}

impl StreamRng {
    pub fn new(seed: u64, stream: u64) -> Self {
        let mut inner = ChaCha8Rng::seed_from_u64(seed);
        inner.set_stream(stream);
        StreamRng { inner }
    }

    /// Uniform index in `0..len`.
    pub fn index(&mut self, len: usize) -> usize {
        self.inner.random_range(0..len)
    }

    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.inner.random_bool(p.clamp(0.0, 1.0))
    }

    pub fn unit(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        if hi > lo {
            self.inner.random_range(lo..hi)
        } else {
            lo
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        items.shuffle(&mut self.inner);
    }

    /// A uniformly random `k`-subset of `items`, as (chosen, rest).
    pub fn split_random<T: Copy>(&mut self, items: &[T], k: usize) -> (Vec<T>, Vec<T>) {
        let mut v = items.to_vec();
        self.shuffle(&mut v);
        let rest = v.split_off(k.min(v.len()));
        (v, rest)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }
}
