//! Counter-free splittable generator used for every random choice in the
//! crate, so independent implementations can reproduce the streams.
//!
//! The generator is the SplitMix64 sequence: starting from a 64-bit state
//! `s`, each draw performs
//!
//! ```text
//! s := s + 0x9E3779B97F4A7C15                      (wrapping)
//! z := s
//! z := (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9      (wrapping)
//! z := (z XOR (z >> 27)) * 0x94D049BB133111EB      (wrapping)
//! output z XOR (z >> 31)
//! ```
//!
//! `substream(label)` derives an independent stream as
//! `Rng::new(finalize(seed XOR finalize(label)))` where `finalize` is the
//! z-mixing above applied once. Bounded draws use `next_u64() % n`; the
//! modulo bias is irrelevant at the desk-scale ranges used here and keeps
//! the stream definition portable.

const GAMMA: u64 = 0x9E3779B97F4A7C15;

fn finalize(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    /// Derives a reproducible independent stream for parallel or per-item use.
    pub fn substream(&self, label: u64) -> Rng {
        Rng::new(finalize(self.state ^ finalize(label)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        finalize(self.state)
    }

    /// Uniform draw from `[0, n)`. `n` must be nonzero.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        self.next_u64() % n
    }

    /// Uniform draw from `[0.0, 1.0)` using the top 53 bits.
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let mut a = Rng::new(42);
        let mut b = Rng::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn substreams_differ() {
        let root = Rng::new(7);
        let mut s0 = root.substream(0);
        let mut s1 = root.substream(1);
        let draws0: Vec<u64> = (0..8).map(|_| s0.next_u64()).collect();
        let draws1: Vec<u64> = (0..8).map(|_| s1.next_u64()).collect();
        assert_ne!(draws0, draws1);
    }

    #[test]
    fn below_in_range() {
        let mut rng = Rng::new(1);
        for _ in 0..1000 {
            assert!(rng.below(7) < 7);
        }
    }
}
