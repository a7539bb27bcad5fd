//! Seeded random instances shared by the integration suites.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use treecut_core::{VertexMultiset, WeightedTree};

/// Uniform-random-parent tree on `n` vertices with integer weights in
/// `0..=max_weight`.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize, max_weight: u64) -> WeightedTree {
    let edges = (1..n)
        .map(|v| {
            let parent = rng.gen_range(0..v);
            let w = rng.gen_range(0..=max_weight) as f64;
            (parent, v, w)
        })
        .collect();
    WeightedTree::new(n, edges).expect("generated edges form a tree")
}

/// Per-vertex multiplicities in `0..=max_mult`, redrawn until the total
/// mass is at most `max_total`.
pub fn random_masses(
    rng: &mut ChaCha8Rng,
    n: usize,
    max_mult: usize,
    max_total: usize,
) -> VertexMultiset {
    loop {
        let masses: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=max_mult)).collect();
        if masses.iter().sum::<usize>() <= max_total {
            return VertexMultiset::from_masses(masses);
        }
    }
}
