//! Seeded random rationals for sampling certificates.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Rational;

pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream for a named task, so results do not depend on run order.
pub fn rng_for(seed: u64, tag: &str) -> Rng8 {
    let h = tag.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    ChaCha8Rng::seed_from_u64(seed ^ h)
}

/// Small rational with numerator in `-9..=9` and denominator in `1..=4`.
pub fn rational(rng: &mut Rng8) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-9i64..=9)), BigInt::from(rng.gen_range(1i64..=4)))
}

pub fn nonzero_rational(rng: &mut Rng8) -> Rational {
    loop {
        let q = rational(rng);
        if q != Rational::from_integer(0.into()) {
            return q;
        }
    }
}

pub fn int_in(rng: &mut Rng8, lo: i64, hi: i64) -> i64 {
    rng.gen_range(lo..=hi)
}
