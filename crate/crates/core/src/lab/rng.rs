//! Seeded pseudo-random numbers with a fixed, documented recurrence.
//!
//! Initial conditions must be reproducible from a seed in any language, so
//! the generator is pinned here rather than delegated to a crate whose
//! algorithm may change between versions:
//!
//! ```text
//! seeding (splitmix64):  z = seed + 0x9E3779B97F4A7C15
//!                        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!                        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!                        state = z ^ (z >> 31), replaced by 1 if zero
//! step (xorshift64*):    x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27
//!                        output = x * 0x2545F4914F6CDD1D   (wrapping)
//! unit float:            (output >> 11) * 2^-53, in [0, 1)
//! ```

#[derive(Clone, Debug)]
pub struct Xorshift64Star {
    state: u64,
}

impl Xorshift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        Xorshift64Star { state: if z == 0 { 1 } else { z } }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in `0..n` (`n > 0`), by rejection to avoid modulo bias.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % n;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Fisher-Yates shuffle.
    pub fn shuffle<T>(&mut self, v: &mut [T]) {
        for i in (1..v.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            v.swap(i, j);
        }
    }
}
