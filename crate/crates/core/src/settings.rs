use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;

use crate::algebra::GRat;

/// Working precision and the seed for every random choice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Settings {
    /// Bits of mantissa for numeric work.
    pub precision: u32,
    pub seed: u64,
}

impl Default for Settings {
    fn default() -> Self {
        Settings { precision: 128, seed: 0 }
    }
}

impl Settings {
    pub fn new(precision: u32, seed: u64) -> Self {
        Settings { precision, seed }
    }

    /// Independent stream per purpose, so results do not depend on call order.
    pub fn rng(&self, purpose: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf29ce484222325;
        for b in purpose.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }

    /// Working precision with guard bits.
    pub fn wp(&self) -> u32 {
        self.precision + 32
    }

    /// Loose tolerance used to filter candidates.
    pub fn loose(&self) -> f64 {
        2f64.powi(-(self.precision as i32) / 4)
    }

    /// Strict residual tolerance.
    pub fn strict(&self) -> f64 {
        2f64.powi(-(self.precision as i32) / 2)
    }
}

/// Small random Gaussian rational with nonzero real and imaginary parts.
pub fn random_grat(rng: &mut ChaCha8Rng) -> GRat {
    let part = |rng: &mut ChaCha8Rng| {
        let mut n: i64 = rng.gen_range(-9..=9);
        if n == 0 {
            n = 1;
        }
        let d: i64 = rng.gen_range(1..=7);
        Rational::from((n, d))
    };
    GRat::new(part(rng), part(rng))
}

/// Small random rational, nonzero.
pub fn random_rational(rng: &mut ChaCha8Rng) -> GRat {
    let mut n: i64 = rng.gen_range(-9..=9);
    if n == 0 {
        n = 2;
    }
    let d: i64 = rng.gen_range(1..=7);
    GRat::from_ratio(n, d)
}
