//! Seeded random automata for experiments and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Alphabet;
use crate::nbw::Nbw;

/// Default seed of the experiment suites.
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

/// A random NBW over the numeric alphabet `{0, .., k-1}` with states
/// `s0 .. s{n-1}`.
///
/// Each possible transition is present with probability `p_trans` and each
/// state is accepting with probability `p_acc`. State `s0` is always
/// initial; every other state is initial with probability 1/8. The result
/// depends only on the arguments.
pub fn random_nbw(seed: u64, n: usize, k: usize, p_trans: f64, p_acc: f64) -> Nbw {
    assert!(n >= 1 && k >= 1, "need at least one state and one symbol");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut initial = vec![0];
    initial.extend((1..n).filter(|_| rng.gen_bool(0.125)));
    let accepting: Vec<usize> = (0..n).filter(|_| rng.gen_bool(p_acc)).collect();
    let mut trans = Vec::new();
    for p in 0..n {
        for a in 0..k {
            for q in 0..n {
                if rng.gen_bool(p_trans) {
                    trans.push((p, a, q));
                }
            }
        }
    }
    let names = (0..n).map(|i| format!("s{i}")).collect();
    Nbw::new(Alphabet::numeric(k).expect("k >= 1"), names, initial, accepting, trans)
        .expect("generated parts are in range")
}

/// The `i`-th automaton of a seeded family: sizes cycle through `1..=max_n`
/// and densities vary with the index.
pub fn random_family(seed: u64, count: usize, max_n: usize, k: usize) -> Vec<Nbw> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = 1 + i % max_n;
            let p_trans = rng.gen_range(0.2..0.6);
            let p_acc = rng.gen_range(0.1..0.6);
            random_nbw(rng.gen(), n, k, p_trans, p_acc)
        })
        .collect()
}
