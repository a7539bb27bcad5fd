//! Bottom-up dynamic program for optimal cuts and partitions.
//!
//! Works on a [`NormalizedInstance`]: a rooted binary tree whose multiset
//! mass sits only at leaves. For a vertex `v` whose subtree holds `c_v`
//! elements, the cell `(v, p, s)` stores the optimal total of
//!
//! 1. cross-pair path weight inside the subtree, over splits of the
//!    subtree's elements into `p` on side A and `c_v - p` on side B,
//! 2. `t` times the summed path weight from side-A elements to `v`, and
//! 3. `s` times the summed path weight from side-B elements to `v`,
//!
//! where `s` and `t = (m - c_v) - s` count the elements outside the subtree
//! that end up on side A and side B. The side-B count `q` and `t` are
//! determined by `(p, s)`, so only those two index the table. Leaves cost
//! nothing (every element sits at the leaf itself), a one-child vertex adds
//! the crossing traffic of its down-edge, and a two-child vertex optimizes
//! over how `p` splits across its children. The root row at `s = 0` yields
//! the optimal value for every split size `k` in one pass; stored split
//! choices let [`backtrack`] rebuild a witness partition.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cut::Partition;
use crate::normalize::{Children, NormalizedInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Maximize,
    Minimize,
}

/// Constraint on the side sizes of the sought partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeConstraint {
    /// Any split; the objective picks the best size.
    AnySplit,
    /// Side A must have exactly `k` elements (and side B the rest).
    ExactSizes(usize),
}

/// Which optimization problem to solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProblemSpec {
    pub objective: Objective,
    pub constraint: SizeConstraint,
}

impl ProblemSpec {
    /// Maximize the cut over all splits.
    pub const fn max_cut() -> Self {
        ProblemSpec {
            objective: Objective::Maximize,
            constraint: SizeConstraint::AnySplit,
        }
    }

    /// Maximize the cut over splits of sizes `(k, m - k)`.
    pub const fn max_partition(k: usize) -> Self {
        ProblemSpec {
            objective: Objective::Maximize,
            constraint: SizeConstraint::ExactSizes(k),
        }
    }

    /// Minimize the cut over splits of sizes `(k, m - k)`.
    pub const fn min_partition(k: usize) -> Self {
        ProblemSpec {
            objective: Objective::Minimize,
            constraint: SizeConstraint::ExactSizes(k),
        }
    }

    /// Maximize the cut over even splits; `total_mass` must be even.
    pub fn max_bisection(total_mass: usize) -> Result<Self, SolveError> {
        if !total_mass.is_multiple_of(2) {
            return Err(SolveError::OddMassForBisection);
        }
        Ok(Self::max_partition(total_mass / 2))
    }

    /// Minimize the cut over even splits; `total_mass` must be even.
    pub fn min_bisection(total_mass: usize) -> Result<Self, SolveError> {
        if !total_mass.is_multiple_of(2) {
            return Err(SolveError::OddMassForBisection);
        }
        Ok(Self::min_partition(total_mass / 2))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveError {
    /// Bisection requested on an odd total mass.
    OddMassForBisection,
    /// Requested side size exceeds the total mass.
    KOutOfRange,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::OddMassForBisection => {
                write!(f, "bisection requires an even total mass")
            }
            SolveError::KOutOfRange => write!(f, "requested side size exceeds the total mass"),
        }
    }
}

impl core::error::Error for SolveError {}

/// Counts of table cells computed by each transition kind.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct SolveStats {
    pub leaf_cells: u64,
    pub one_child_transitions: u64,
    pub two_child_transitions: u64,
}

struct VertexTable {
    subtree_mass: usize,
    /// Cells per `p` row: `m - subtree_mass + 1` feasible values of `s`.
    stride: usize,
    value: Vec<f64>,
    /// Chosen left-child share of `p`, two-child vertices only.
    split: Vec<u16>,
}

impl VertexTable {
    fn unfilled() -> Self {
        VertexTable {
            subtree_mass: 0,
            stride: 0,
            value: Vec::new(),
            split: Vec::new(),
        }
    }

    fn idx(&self, p: usize, s: usize) -> usize {
        debug_assert!(p <= self.subtree_mass && s < self.stride);
        p * self.stride + s
    }
}

/// Filled solver state: per-vertex value tables plus split backpointers.
pub struct DpTable {
    total_mass: usize,
    root: usize,
    tables: Vec<VertexTable>,
}

impl DpTable {
    pub fn total_mass(&self) -> usize {
        self.total_mass
    }

    /// Value of cell `(v, p, s)`. `p` must not exceed the subtree mass of
    /// `v`, nor `s` the mass outside it.
    pub fn value(&self, v: usize, p: usize, s: usize) -> f64 {
        let t = &self.tables[v];
        assert!(
            p <= t.subtree_mass && s < t.stride,
            "cell ({v}, {p}, {s}) out of range"
        );
        t.value[t.idx(p, s)]
    }

    /// Optimal values at the root for every split size `k`.
    pub fn root_values(&self) -> Vec<f64> {
        let t = &self.tables[self.root];
        (0..=self.total_mass)
            .map(|k| t.value[t.idx(k, 0)])
            .collect()
    }

    fn split(&self, v: usize, p: usize, s: usize) -> usize {
        let t = &self.tables[v];
        t.split[t.idx(p, s)] as usize
    }
}

/// Fills the table bottom-up (children before parents).
pub fn fill_table(inst: &NormalizedInstance, objective: Objective) -> (DpTable, SolveStats) {
    let m = inst.total_mass();
    assert!(
        m <= u16::MAX as usize,
        "total mass {m} exceeds the split backpointer range"
    );
    let mut tables: Vec<VertexTable> = (0..inst.vertex_count())
        .map(|_| VertexTable::unfilled())
        .collect();
    let mut stats = SolveStats::default();

    for &v in inst.post_order() {
        let c = inst.subtree_mass(v);
        let stride = m - c + 1;
        let cells = (c + 1) * stride;
        let table = match inst.children(v) {
            Children::None => {
                // Every element of the subtree sits at `v` itself: all
                // pair and to-`v` distances are zero.
                stats.leaf_cells += cells as u64;
                VertexTable {
                    subtree_mass: c,
                    stride,
                    value: vec![0.0; cells],
                    split: Vec::new(),
                }
            }
            Children::One(child) => {
                stats.one_child_transitions += cells as u64;
                let w = inst.weight_to_parent(child);
                let ct = &tables[child];
                debug_assert_eq!(ct.subtree_mass, c);
                let mut value = vec![0.0; cells];
                for p in 0..=c {
                    let pf = p as f64;
                    let qf = (c - p) as f64;
                    let row = p * stride;
                    for s in 0..=(m - c) {
                        // The down-edge is crossed by every (inside-A,
                        // outside-B) and (inside-B, outside-A) pair.
                        let tf = (m - c - s) as f64;
                        value[row + s] = ct.value[row + s] + pf * tf * w + qf * (s as f64) * w;
                    }
                }
                VertexTable {
                    subtree_mass: c,
                    stride,
                    value,
                    split: Vec::new(),
                }
            }
            Children::Two(left, right) => {
                stats.two_child_transitions += cells as u64;
                let w1 = inst.weight_to_parent(left);
                let w2 = inst.weight_to_parent(right);
                let c1 = inst.subtree_mass(left);
                let c2 = inst.subtree_mass(right);
                debug_assert_eq!(c1 + c2, c, "internal vertices carry no mass");
                let lt = &tables[left];
                let rt = &tables[right];
                let mut value = vec![0.0; cells];
                let mut split = vec![0u16; cells];
                for p in 0..=c {
                    let lo = p.saturating_sub(c2);
                    let hi = c1.min(p);
                    let row = p * stride;
                    for s in 0..=(m - c) {
                        let tf = (m - c - s) as f64;
                        let sf = s as f64;
                        let mut best = match objective {
                            Objective::Maximize => f64::NEG_INFINITY,
                            Objective::Minimize => f64::INFINITY,
                        };
                        let mut best_p1 = lo;
                        for p1 in lo..=hi {
                            let p2 = p - p1;
                            let q1 = c1 - p1;
                            let q2 = c2 - p2;
                            // Each child sees the other's elements as part
                            // of the outside.
                            let inner = lt.value[lt.idx(p1, s + p2)] + rt.value[rt.idx(p2, s + p1)];
                            let cross = (p1 as f64 * q2 as f64 + p2 as f64 * q1 as f64) * (w1 + w2);
                            let a_to_outside = (p1 as f64 * w1 + p2 as f64 * w2) * tf;
                            let b_to_outside = (q1 as f64 * w1 + q2 as f64 * w2) * sf;
                            let cand = inner + cross + a_to_outside + b_to_outside;
                            let better = match objective {
                                Objective::Maximize => cand > best,
                                Objective::Minimize => cand < best,
                            };
                            if better {
                                best = cand;
                                best_p1 = p1;
                            }
                        }
                        value[row + s] = best;
                        split[row + s] = best_p1 as u16;
                    }
                }
                VertexTable {
                    subtree_mass: c,
                    stride,
                    value,
                    split,
                }
            }
        };
        tables[v] = table;
    }

    (
        DpTable {
            total_mass: m,
            root: inst.root(),
            tables,
        },
        stats,
    )
}

/// Rebuilds a partition achieving the root value for split size `k`,
/// with counts aggregated per original vertex.
pub fn backtrack(
    inst: &NormalizedInstance,
    table: &DpTable,
    k: usize,
) -> Result<Partition, SolveError> {
    if k > table.total_mass() {
        return Err(SolveError::KOutOfRange);
    }
    let mut side_a = vec![0usize; inst.original_vertex_count()];
    let mut stack = vec![(inst.root(), k, 0usize)];
    while let Some((v, p, s)) = stack.pop() {
        match inst.children(v) {
            Children::None => side_a[inst.origin(v)] += p,
            Children::One(child) => stack.push((child, p, s)),
            Children::Two(left, right) => {
                let p1 = table.split(v, p, s);
                let p2 = p - p1;
                stack.push((left, p1, s + p2));
                stack.push((right, p2, s + p1));
            }
        }
    }
    let side_b = inst
        .original_masses()
        .iter()
        .zip(&side_a)
        .map(|(&mult, &a)| mult - a)
        .collect();
    Ok(Partition::from_sides(side_a, side_b).expect("sides cover the same vertices"))
}

/// Outcome of a solve: optima for every split size plus a witness
/// partition for the requested (or best) size.
#[derive(Debug)]
pub struct SolveResult {
    /// `values_by_k[k]` is the optimal cut value over splits of sizes
    /// `(k, m - k)`.
    pub values_by_k: Vec<f64>,
    /// The split size the witness partition realizes.
    pub k: usize,
    /// Objective value of the witness partition, `values_by_k[k]`.
    pub value: f64,
    pub partition: Partition,
    pub stats: SolveStats,
}

/// Solves the requested problem on a normalized instance.
pub fn solve(inst: &NormalizedInstance, spec: &ProblemSpec) -> Result<SolveResult, SolveError> {
    let m = inst.total_mass();
    let requested = match spec.constraint {
        SizeConstraint::AnySplit => None,
        SizeConstraint::ExactSizes(k) => {
            if k > m {
                return Err(SolveError::KOutOfRange);
            }
            Some(k)
        }
    };
    let (table, stats) = fill_table(inst, spec.objective);
    let values_by_k = table.root_values();
    let k = requested.unwrap_or_else(|| best_split(&values_by_k, spec.objective));
    let partition = backtrack(inst, &table, k)?;
    Ok(SolveResult {
        value: values_by_k[k],
        k,
        values_by_k,
        partition,
        stats,
    })
}

/// Smallest split size attaining the optimum.
fn best_split(values: &[f64], objective: Objective) -> usize {
    let mut best = 0;
    for (k, &v) in values.iter().enumerate().skip(1) {
        let better = match objective {
            Objective::Maximize => v > values[best],
            Objective::Minimize => v < values[best],
        };
        if better {
            best = k;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cut::cut_value_pairwise;
    use crate::line::line_to_tree;
    use crate::multiset::VertexMultiset;
    use crate::normalize::normalize;
    use crate::tree::WeightedTree;

    fn norm(tree: &WeightedTree, masses: &VertexMultiset) -> NormalizedInstance {
        normalize(tree, masses, 0).unwrap()
    }

    #[test]
    fn max_cut_on_unit_path() {
        let tree = WeightedTree::new(3, vec![(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let masses = VertexMultiset::new(3, (0..3).map(|v| (v, 1))).unwrap();
        let inst = norm(&tree, &masses);
        let res = solve(&inst, &ProblemSpec::max_cut()).unwrap();
        assert_eq!(res.value, 3.0);
        assert_eq!(cut_value_pairwise(&tree, &res.partition).unwrap(), 3.0);
    }

    #[test]
    fn coincident_copies_cut_nothing() {
        let tree = WeightedTree::new(1, vec![]).unwrap();
        let masses = VertexMultiset::new(1, [(0, 2)]).unwrap();
        let inst = norm(&tree, &masses);
        let res = solve(&inst, &ProblemSpec::max_cut()).unwrap();
        assert_eq!(res.value, 0.0);
    }

    #[test]
    fn min_bisection_prefers_interleaving() {
        let (tree, masses) = line_to_tree(&[0.0, 1.0, 2.0, 3.0]).unwrap();
        let inst = norm(&tree, &masses);
        let spec = ProblemSpec::min_bisection(masses.total_mass()).unwrap();
        let res = solve(&inst, &spec).unwrap();
        assert_eq!(res.value, 6.0);
        assert_eq!(res.partition.size_a(), 2);
        assert_eq!(cut_value_pairwise(&tree, &res.partition).unwrap(), 6.0);
    }

    #[test]
    fn max_cut_on_weighted_star() {
        let tree = WeightedTree::new(4, vec![(0, 1, 1.0), (0, 2, 2.0), (0, 3, 3.0)]).unwrap();
        let masses = VertexMultiset::new(4, [(1, 1), (2, 1), (3, 1)]).unwrap();
        let inst = norm(&tree, &masses);
        let res = solve(&inst, &ProblemSpec::max_cut()).unwrap();
        assert_eq!(res.value, 9.0);
        assert_eq!(cut_value_pairwise(&tree, &res.partition).unwrap(), 9.0);
    }

    #[test]
    fn fixed_size_minimization_keeps_copies_together() {
        let tree = WeightedTree::new(2, vec![(0, 1, 5.0)]).unwrap();
        let masses = VertexMultiset::new(2, [(0, 2), (1, 1)]).unwrap();
        let inst = norm(&tree, &masses);
        let res = solve(&inst, &ProblemSpec::min_partition(1)).unwrap();
        assert_eq!(res.value, 5.0);
        assert_eq!(cut_value_pairwise(&tree, &res.partition).unwrap(), 5.0);
    }

    #[test]
    fn two_leaf_children_cell_values() {
        // Root with two mass-1 leaf children over unit edges: putting the
        // two copies on opposite sides is worth the two-edge path.
        let tree = WeightedTree::new(3, vec![(0, 1, 1.0), (0, 2, 1.0)]).unwrap();
        let masses = VertexMultiset::new(3, [(1, 1), (2, 1)]).unwrap();
        let inst = norm(&tree, &masses);
        let (table, _) = fill_table(&inst, Objective::Maximize);
        assert_eq!(table.value(0, 1, 0), 2.0);
        assert_eq!(table.value(0, 0, 0), 0.0);
        assert_eq!(table.value(0, 2, 0), 0.0);
    }

    #[test]
    fn zero_weight_edge_adds_nothing() {
        let tree = WeightedTree::new(2, vec![(0, 1, 0.0)]).unwrap();
        let masses = VertexMultiset::new(2, [(1, 2)]).unwrap();
        let inst = norm(&tree, &masses);
        let (table, _) = fill_table(&inst, Objective::Maximize);
        for p in 0..=2 {
            assert_eq!(table.value(inst.root(), p, 0), 0.0);
        }
    }

    #[test]
    fn massless_subtrees_cost_nothing() {
        // Binarizing an empty-multiset star leaves a dummy chain whose
        // two-child cells have a single feasible split, worth zero.
        let tree = WeightedTree::new(4, vec![(0, 1, 4.0), (0, 2, 5.0), (0, 3, 6.0)]).unwrap();
        let masses = VertexMultiset::new(4, []).unwrap();
        let inst = norm(&tree, &masses);
        assert_eq!(inst.dummy_count(), 1);
        let (table, stats) = fill_table(&inst, Objective::Maximize);
        assert!(stats.two_child_transitions > 0);
        for v in 0..inst.vertex_count() {
            assert_eq!(table.value(v, 0, 0), 0.0);
        }
    }

    #[test]
    fn root_bound_cells_equal_the_child_row() {
        // With no elements outside the subtree (s = t = 0 at a unary
        // root) the down-edge carries no crossing traffic.
        let tree = WeightedTree::new(3, vec![(0, 1, 7.0), (1, 2, 2.0)]).unwrap();
        let masses = VertexMultiset::new(3, [(2, 3)]).unwrap();
        let inst = norm(&tree, &masses);
        let root = inst.root();
        let child = match inst.children(root) {
            Children::One(c) => c,
            other => panic!("expected a unary root, got {other:?}"),
        };
        let (table, _) = fill_table(&inst, Objective::Maximize);
        for p in 0..=3 {
            assert_eq!(table.value(root, p, 0), table.value(child, p, 0));
        }
    }

    #[test]
    fn exact_size_minimum_never_beats_threshold_cuts() {
        // On the line, the prefix cut of size k is one candidate among
        // many; the fixed-size minimum is at most its value.
        let (tree, masses) = line_to_tree(&[0.0, 0.5, 2.0, 3.5, 7.0, 9.0]).unwrap();
        let inst = norm(&tree, &masses);
        let m = masses.total_mass();
        for k in 0..=m {
            let mut side_a = vec![0; tree.vertex_count()];
            side_a[..k].fill(1);
            let threshold = crate::cut::Partition::new(&masses, side_a).unwrap();
            let threshold_value = cut_value_pairwise(&tree, &threshold).unwrap();
            let res = solve(&inst, &ProblemSpec::min_partition(k)).unwrap();
            assert!(res.value <= threshold_value, "k={k}");
        }
    }

    #[test]
    fn trivial_split_sizes_cost_nothing() {
        let tree = WeightedTree::new(3, vec![(0, 1, 2.0), (1, 2, 3.0)]).unwrap();
        let masses = VertexMultiset::new(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        let inst = norm(&tree, &masses);
        let m = masses.total_mass();
        for spec in [ProblemSpec::max_partition(0), ProblemSpec::max_partition(m)] {
            let res = solve(&inst, &spec).unwrap();
            assert_eq!(res.value, 0.0);
        }
        let all_b = solve(&inst, &ProblemSpec::max_partition(0)).unwrap();
        assert_eq!(all_b.partition.size_a(), 0);
        assert_eq!(all_b.partition.size_b(), m);
        let all_a = solve(&inst, &ProblemSpec::max_partition(m)).unwrap();
        assert_eq!(all_a.partition.size_a(), m);
    }

    #[test]
    fn infeasible_specs_error_out() {
        let tree = WeightedTree::new(2, vec![(0, 1, 1.0)]).unwrap();
        let masses = VertexMultiset::new(2, [(0, 2), (1, 1)]).unwrap();
        let inst = norm(&tree, &masses);
        assert_eq!(
            ProblemSpec::max_bisection(3).unwrap_err(),
            SolveError::OddMassForBisection
        );
        assert_eq!(
            solve(&inst, &ProblemSpec::min_partition(4)).unwrap_err(),
            SolveError::KOutOfRange
        );
        let (table, _) = fill_table(&inst, Objective::Maximize);
        assert_eq!(
            backtrack(&inst, &table, 4).unwrap_err(),
            SolveError::KOutOfRange
        );
    }

    #[test]
    fn split_values_are_complement_symmetric() {
        let tree =
            WeightedTree::new(5, vec![(0, 1, 2.0), (0, 2, 7.0), (2, 3, 1.0), (2, 4, 4.0)]).unwrap();
        let masses = VertexMultiset::new(5, [(0, 2), (1, 1), (3, 2), (4, 1)]).unwrap();
        let inst = norm(&tree, &masses);
        let m = masses.total_mass();
        for objective in [Objective::Maximize, Objective::Minimize] {
            let (table, _) = fill_table(&inst, objective);
            let values = table.root_values();
            for k in 0..=m {
                assert_eq!(values[k], values[m - k], "split {k} vs {}", m - k);
            }
            // Cell-level symmetry: relabeling the sides swaps (p, s) with
            // (c - p, out - s). Every cell is also finite and nonnegative.
            for v in 0..inst.vertex_count() {
                let c = inst.subtree_mass(v);
                for p in 0..=c {
                    for s in 0..=(m - c) {
                        let cell = table.value(v, p, s);
                        assert!(cell.is_finite() && cell >= 0.0);
                        assert_eq!(cell, table.value(v, c - p, m - c - s));
                    }
                }
            }
        }
    }

    #[test]
    fn leaf_rows_stay_zero() {
        let tree = WeightedTree::new(4, vec![(0, 1, 3.0), (0, 2, 1.0), (0, 3, 2.0)]).unwrap();
        let masses = VertexMultiset::new(4, [(0, 1), (1, 2), (2, 1), (3, 3)]).unwrap();
        let inst = norm(&tree, &masses);
        let (table, _) = fill_table(&inst, Objective::Maximize);
        let m = masses.total_mass();
        for v in 0..inst.vertex_count() {
            if inst.is_leaf(v) {
                let c = inst.subtree_mass(v);
                for p in 0..=c {
                    for s in 0..=(m - c) {
                        assert_eq!(table.value(v, p, s), 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn reconstruction_matches_reported_values() {
        let tree = WeightedTree::new(
            6,
            vec![
                (0, 1, 1.0),
                (0, 2, 4.0),
                (1, 3, 2.0),
                (1, 4, 1.0),
                (2, 5, 3.0),
            ],
        )
        .unwrap();
        let masses = VertexMultiset::new(6, [(0, 1), (3, 2), (4, 1), (5, 1)]).unwrap();
        let inst = norm(&tree, &masses);
        for objective in [Objective::Maximize, Objective::Minimize] {
            let (table, _) = fill_table(&inst, objective);
            let values = table.root_values();
            for (k, &value) in values.iter().enumerate() {
                let part = backtrack(&inst, &table, k).unwrap();
                assert_eq!(part.size_a(), k);
                assert_eq!(
                    cut_value_pairwise(&tree, &part).unwrap(),
                    value,
                    "objective {objective:?}, split {k}"
                );
            }
        }
    }

    #[test]
    fn any_split_minimization_is_trivial() {
        let tree = WeightedTree::new(2, vec![(0, 1, 9.0)]).unwrap();
        let masses = VertexMultiset::new(2, [(0, 1), (1, 1)]).unwrap();
        let inst = norm(&tree, &masses);
        let spec = ProblemSpec {
            objective: Objective::Minimize,
            constraint: SizeConstraint::AnySplit,
        };
        let res = solve(&inst, &spec).unwrap();
        assert_eq!(res.value, 0.0);
        assert_eq!(res.k, 0);
    }

    #[test]
    fn one_child_only_on_end_loaded_path() {
        // All mass at the far leaf: no pendants are added, every internal
        // vertex keeps a single child, so only the one-child rule fires.
        let tree = WeightedTree::new(4, vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)]).unwrap();
        let masses = VertexMultiset::new(4, [(3, 4)]).unwrap();
        let inst = norm(&tree, &masses);
        let (_, stats) = fill_table(&inst, Objective::Maximize);
        assert_eq!(stats.two_child_transitions, 0);
        assert!(stats.one_child_transitions > 0);
    }

    #[test]
    fn line_instances_branch_only_at_mass_pendants() {
        // On a line instance every two-child vertex is an original path
        // vertex paired with its own zero-weight mass pendant, so the split
        // enumeration width never exceeds the vertex's multiplicity.
        let (tree, masses) = line_to_tree(&[0.0, 1.5, 2.0, 4.0, 7.0]).unwrap();
        let inst = norm(&tree, &masses);
        assert_eq!(inst.dummy_count(), 0);
        for v in 0..inst.vertex_count() {
            if let Children::Two(a, b) = inst.children(v) {
                let pendant = [a, b]
                    .into_iter()
                    .find(|&ch| inst.is_leaf(ch) && inst.origin(ch) == v);
                let pendant = pendant.expect("two-child vertex without a mass pendant");
                assert_eq!(inst.weight_to_parent(pendant), 0.0);
                assert_eq!(inst.subtree_mass(pendant), inst.leaf_mass(pendant));
            }
        }
    }
}
