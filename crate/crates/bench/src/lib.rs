//! Shared inputs for the criterion benchmarks.

use fdfw_core::{gen_bn, gen_bn_dbw, random_nbw, Nbw, DEFAULT_SEED};

/// `B_n` and `B'_n` for the given sizes, labelled `bn/<n>` and `bn-dbw/<n>`.
pub fn families(sizes: &[usize]) -> Vec<(String, Nbw)> {
    sizes
        .iter()
        .flat_map(|&n| [(format!("bn/{n}"), gen_bn(n)), (format!("bn-dbw/{n}"), gen_bn_dbw(n))])
        .collect()
}

/// A fixed random automaton with `n` states over two symbols.
pub fn random(n: usize) -> (String, Nbw) {
    (
        format!("random/{n}"),
        random_nbw(DEFAULT_SEED + n as u64, n, 2, 0.35, 0.3),
    )
}
