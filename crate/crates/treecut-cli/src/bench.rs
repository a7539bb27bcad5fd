//! End-to-end solve timing across instance sizes.

use std::time::Instant;

use treecut_core::{normalize, solve, ProblemSpec};

use crate::generate::{generate, Shape};

pub struct BenchRow {
    pub family: &'static str,
    pub size: usize,
    pub mean_ms: f64,
    pub stddev_ms: f64,
}

/// Times `repeats` end-to-end solves (normalize + solve + backtrack) of a
/// freshly generated set instance per family and size. The instances are
/// sets (multiplicity 1 everywhere), so `spec_of` receives `n` as the
/// total mass.
pub fn run(
    sizes: &[usize],
    spec_of: &dyn Fn(usize) -> ProblemSpec,
    seed: u64,
    repeats: usize,
) -> Vec<BenchRow> {
    let mut rows = Vec::new();
    for (family, shape) in [("path", Shape::Path), ("random-tree", Shape::RandomTree)] {
        for (i, &n) in sizes.iter().enumerate() {
            // One deterministic instance per (family, size).
            let instance_seed = seed ^ ((i as u64 + 1) << 32) ^ shape_tag(shape);
            let (tree, masses) = generate(shape, n, 10, 1, instance_seed);
            let spec = spec_of(n);
            let mut samples = Vec::with_capacity(repeats);
            for _ in 0..repeats {
                let start = Instant::now();
                let inst = normalize(&tree, &masses, 0).expect("generated instance is valid");
                let result = solve(&inst, &spec).expect("spec is feasible for set instances");
                std::hint::black_box(result.value);
                samples.push(start.elapsed().as_secs_f64() * 1e3);
            }
            rows.push(BenchRow {
                family,
                size: n,
                mean_ms: mean(&samples),
                stddev_ms: stddev(&samples),
            });
        }
    }
    rows
}

fn shape_tag(shape: Shape) -> u64 {
    match shape {
        Shape::Path => 1,
        Shape::Star => 2,
        Shape::Caterpillar => 3,
        Shape::RandomTree => 4,
    }
}

fn mean(samples: &[f64]) -> f64 {
    samples.iter().sum::<f64>() / samples.len() as f64
}

fn stddev(samples: &[f64]) -> f64 {
    if samples.len() < 2 {
        return 0.0;
    }
    let m = mean(samples);
    let var = samples.iter().map(|s| (s - m) * (s - m)).sum::<f64>() / (samples.len() - 1) as f64;
    var.sqrt()
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("family,size,mean_ms,stddev_ms\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{:.3},{:.3}\n",
            row.family, row.size, row.mean_ms, row.stddev_ms
        ));
    }
    out
}
