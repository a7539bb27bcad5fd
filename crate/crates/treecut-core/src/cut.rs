//! Two-sided partitions of a vertex multiset and their cut values.
//!
//! The cut value of a partition is the sum of tree distances over all cross
//! pairs, one element from each side, counted with multiplicity. Two
//! evaluators compute it: [`cut_value_pairwise`] straight from that
//! definition, and [`cut_value_edge_decomposition`] by regrouping the same
//! sum per edge in a single traversal. They agree exactly on integer
//! weights and serve as cross-checks for each other.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::multiset::VertexMultiset;
use crate::tree::WeightedTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalError {
    /// Partition side counts do not match the instance's multiset.
    PartitionMassMismatch,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::PartitionMassMismatch => {
                write!(f, "partition side counts do not match the multiset")
            }
        }
    }
}

impl core::error::Error for EvalError {}

/// A split of a vertex multiset into sides A and B.
///
/// Per vertex `v`, `side_a[v]` copies go to A and `side_b[v]` to B; the two
/// always sum to the multiplicity of `v` in the companion multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    side_a: Vec<usize>,
    side_b: Vec<usize>,
}

impl Partition {
    /// Splits `masses` according to per-vertex side-A counts; side B gets
    /// the remainder.
    pub fn new(masses: &VertexMultiset, side_a: Vec<usize>) -> Result<Self, EvalError> {
        if side_a.len() != masses.vertex_count() {
            return Err(EvalError::PartitionMassMismatch);
        }
        let mut side_b = Vec::with_capacity(side_a.len());
        for (v, &a) in side_a.iter().enumerate() {
            let mult = masses.mass(v);
            if a > mult {
                return Err(EvalError::PartitionMassMismatch);
            }
            side_b.push(mult - a);
        }
        Ok(Partition { side_a, side_b })
    }

    /// Builds a partition from explicit side counts.
    pub fn from_sides(side_a: Vec<usize>, side_b: Vec<usize>) -> Result<Self, EvalError> {
        if side_a.len() != side_b.len() {
            return Err(EvalError::PartitionMassMismatch);
        }
        Ok(Partition { side_a, side_b })
    }

    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[usize] {
        &self.side_b
    }

    pub fn vertex_count(&self) -> usize {
        self.side_a.len()
    }

    /// Size of side A.
    pub fn size_a(&self) -> usize {
        self.side_a.iter().sum()
    }

    /// Size of side B.
    pub fn size_b(&self) -> usize {
        self.side_b.iter().sum()
    }

    /// The same partition with the side labels exchanged.
    pub fn swapped(&self) -> Partition {
        Partition {
            side_a: self.side_b.clone(),
            side_b: self.side_a.clone(),
        }
    }

    /// True when the partition matches the multiset vertex for vertex.
    pub fn matches(&self, masses: &VertexMultiset) -> bool {
        self.side_a.len() == masses.vertex_count()
            && self
                .side_a
                .iter()
                .zip(&self.side_b)
                .enumerate()
                .all(|(v, (&a, &b))| a + b == masses.mass(v))
    }
}

/// Cut value by the definition: sum of distances over all cross pairs.
///
/// Copies at the same vertex are distance zero apart and contribute nothing
/// to each other.
pub fn cut_value_pairwise(tree: &WeightedTree, partition: &Partition) -> Result<f64, EvalError> {
    if partition.vertex_count() != tree.vertex_count() {
        return Err(EvalError::PartitionMassMismatch);
    }
    let support: Vec<usize> = (0..tree.vertex_count())
        .filter(|&v| partition.side_a[v] + partition.side_b[v] > 0)
        .collect();
    let mut total = 0.0;
    for (i, &u) in support.iter().enumerate() {
        if i + 1 == support.len() {
            break;
        }
        let dist = tree.distances_from(u).expect("support vertex is in range");
        let (a_u, b_u) = (partition.side_a[u] as f64, partition.side_b[u] as f64);
        for &v in &support[i + 1..] {
            let (a_v, b_v) = (partition.side_a[v] as f64, partition.side_b[v] as f64);
            total += (a_u * b_v + b_u * a_v) * dist[v];
        }
    }
    Ok(total)
}

/// Cut value regrouped per edge in one traversal.
///
/// An edge `e` of weight `w` lies on the path of a cross pair exactly when
/// the pair straddles it, so its contribution is
/// `w * (below_a * (kB - below_b) + below_b * (kA - below_a))` where
/// `below_*` are the side masses strictly below `e`.
pub fn cut_value_edge_decomposition(
    tree: &WeightedTree,
    partition: &Partition,
) -> Result<f64, EvalError> {
    if partition.vertex_count() != tree.vertex_count() {
        return Err(EvalError::PartitionMassMismatch);
    }
    let n = tree.vertex_count();
    let ka = partition.size_a() as f64;
    let kb = partition.size_b() as f64;

    // Root at 0, order vertices parents-first.
    let mut parent = vec![usize::MAX; n];
    let mut weight_up = vec![0.0; n];
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    visited[0] = true;
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        order.push(u);
        for &(v, w) in tree.neighbors(u) {
            if !visited[v] {
                visited[v] = true;
                parent[v] = u;
                weight_up[v] = w;
                stack.push(v);
            }
        }
    }

    let mut below_a = vec![0usize; n];
    let mut below_b = vec![0usize; n];
    let mut total = 0.0;
    for &v in order.iter().rev() {
        below_a[v] += partition.side_a[v];
        below_b[v] += partition.side_b[v];
        if parent[v] != usize::MAX {
            let (x, y) = (below_a[v] as f64, below_b[v] as f64);
            total += weight_up[v] * (x * (kb - y) + y * (ka - x));
            below_a[parent[v]] += below_a[v];
            below_b[parent[v]] += below_b[v];
        }
    }
    Ok(total)
}
