//! Deterministic random instance generation.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treecut_core::{VertexMultiset, WeightedTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    Path,
    Star,
    Caterpillar,
    /// Each vertex `i >= 1` attaches to a uniformly random earlier vertex.
    RandomTree,
}

/// Generates an instance of `n` vertices: integer edge weights uniform in
/// `0..=max_weight`, multiplicities uniform in `1..=max_mult`. The same
/// arguments and seed always produce the same instance.
pub fn generate(
    shape: Shape,
    n: usize,
    max_weight: u64,
    max_mult: usize,
    seed: u64,
) -> (WeightedTree, VertexMultiset) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weight = |rng: &mut ChaCha8Rng| rng.gen_range(0..=max_weight) as f64;
    let edges: Vec<(usize, usize, f64)> = match shape {
        Shape::Path => (1..n).map(|v| (v - 1, v, weight(&mut rng))).collect(),
        Shape::Star => (1..n).map(|v| (0, v, weight(&mut rng))).collect(),
        Shape::Caterpillar => {
            // Spine path of ceil(n/2) vertices, legs attached round-robin.
            let spine = n.div_ceil(2);
            let mut edges: Vec<(usize, usize, f64)> =
                (1..spine).map(|v| (v - 1, v, weight(&mut rng))).collect();
            for leg in spine..n {
                edges.push(((leg - spine) % spine, leg, weight(&mut rng)));
            }
            edges
        }
        Shape::RandomTree => (1..n)
            .map(|v| (rng.gen_range(0..v), v, weight(&mut rng)))
            .collect(),
    };
    let tree = WeightedTree::new(n, edges).expect("generated edges form a tree");
    let masses: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=max_mult)).collect();
    (tree, VertexMultiset::from_masses(masses))
}

/// A small instance within the oracle's mass cap, for verification runs:
/// random-tree shape, weights in `0..=10`, multiplicities in `0..=3`
/// redrawn until the total mass is at most 10.
pub fn generate_verification_instance(
    rng: &mut ChaCha8Rng,
    max_n: usize,
) -> (WeightedTree, VertexMultiset) {
    let n = rng.gen_range(1..=max_n);
    let edges = (1..n)
        .map(|v| {
            let parent = rng.gen_range(0..v);
            (parent, v, rng.gen_range(0..=10u64) as f64)
        })
        .collect();
    let tree = WeightedTree::new(n, edges).expect("generated edges form a tree");
    let masses = loop {
        let masses: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        if masses.iter().sum::<usize>() <= 10 {
            break masses;
        }
    };
    (tree, VertexMultiset::from_masses(masses))
}
