//! The fixed PRNG every randomized transform draws from.
//!
//! `xorshift64*` (Vigna 2016) with shift triple (12, 25, 27) and output
//! multiplier `0x2545F4914F6CDD1D`, seeded through one SplitMix64 step so that
//! nearby seeds start far apart and the zero state cannot occur. Bounded draws
//! use rejection sampling on the raw 64-bit output. `docs/seeds.md` is the
//! byte-level description other implementations must follow.

pub(crate) const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer; a bijection on `u64`.
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let state = mix64(seed.wrapping_add(GOLDEN_GAMMA));
        Self {
            state: if state == 0 { GOLDEN_GAMMA } else { state },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform integer in `0..bound`. Draws below `2^64 mod bound` are
    /// rejected so every residue is equally likely.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let reject_under = bound.wrapping_neg() % bound;
        loop {
            let r = self.next_u64();
            if r >= reject_under {
                return r % bound;
            }
        }
    }

    /// Uniform float in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Fisher-Yates, walking `i` from the last index down to 1 and swapping
    /// with `below(i + 1)`.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_outputs_are_pinned() {
        // Frozen so that changes to the generator are caught; docs/seeds.md
        // lists the same values.
        assert_eq!(mix64(0), 0);
        assert_eq!(mix64(GOLDEN_GAMMA), 0xE220_A839_7B1D_CDAF);
        let mut rng = XorShift64Star::new(0);
        let first: Vec<u64> = (0..3).map(|_| rng.next_u64()).collect();
        assert_eq!(first, PINNED_SEED0);
    }

    const PINNED_SEED0: [u64; 3] = [0x7BBC_B40D_5506_82D0, 0xDE7F_E413_D00C_C9FD, 0xB3C6_3835_3C66_8C91];

    #[test]
    fn below_stays_in_range_and_hits_every_value() {
        let mut rng = XorShift64Star::new(7);
        let mut seen = [0usize; 6];
        for _ in 0..6000 {
            seen[rng.below(6) as usize] += 1;
        }
        assert!(seen.iter().all(|&c| c > 850 && c < 1150), "{seen:?}");
    }

    #[test]
    fn shuffle_is_a_permutation() {
        let mut rng = XorShift64Star::new(1);
        let mut v: Vec<u32> = (0..100).collect();
        rng.shuffle(&mut v);
        let mut sorted = v.clone();
        sorted.sort();
        assert_eq!(sorted, (0..100).collect::<Vec<_>>());
        assert_ne!(v, sorted);
    }

    #[test]
    fn f64_in_unit_interval() {
        let mut rng = XorShift64Star::new(3);
        for _ in 0..1000 {
            let x = rng.next_f64();
            assert!((0.0..1.0).contains(&x));
        }
    }
}
