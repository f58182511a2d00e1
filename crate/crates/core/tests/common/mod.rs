#![allow(dead_code)]

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rmsynth::{BooleanFunction, MixedExpansion, MixedTerm};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_function(rng: &mut impl Rng, n: usize) -> BooleanFunction {
    let minterms: Vec<u64> = (0..1u64 << n).filter(|_| rng.random_bool(0.5)).collect();
    BooleanFunction::from_minterms(n, &minterms).unwrap()
}

pub fn random_mixed(rng: &mut impl Rng, n: usize) -> MixedExpansion {
    let count = rng.random_range(0..=2 * n + 2);
    let full = (1u32 << n) - 1;
    let terms = (0..count).map(|_| {
        let presence = rng.random_range(0..=full);
        let complemented = rng.random_range(0..=full) & presence;
        MixedTerm::new(presence, complemented).unwrap()
    });
    MixedExpansion::new(n, terms).unwrap()
}

/// Direct sum-of-products reading of a mixed expansion at one point,
/// written independently of the library's evaluators.
pub fn oracle_eval(e: &MixedExpansion, a: u32) -> bool {
    let mut acc = false;
    for t in e.terms() {
        let mut product = true;
        for k in 0..32 {
            if t.presence() >> k & 1 == 1 {
                let x = a >> k & 1 == 1;
                let literal = if t.complemented() >> k & 1 == 1 { !x } else { x };
                product &= literal;
            }
        }
        acc ^= product;
    }
    acc
}
