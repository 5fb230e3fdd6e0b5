//! The 64-bit linear congruential generator used for every random sample.
//!
//! `state ← state·6364136223846793005 + 1442695040888963407 (mod 2⁶⁴)`
//! (Knuth's MMIX constants). Outputs are the high 32 bits of the new state,
//! so any language with wrapping 64-bit arithmetic reproduces the stream.

pub const MULTIPLIER: u64 = 6364136223846793005;
pub const INCREMENT: u64 = 1442695040888963407;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform-ish in `0..n` by reduction of the high word; the bias is
    /// irrelevant for the tiny ranges used here.
    pub fn below(&mut self, n: u32) -> u32 {
        assert!(n > 0, "empty range");
        self.next_u32() % n
    }

    /// In `lo..=hi`.
    pub fn between(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u32) as i64
    }
}
