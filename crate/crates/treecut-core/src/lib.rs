//! Exact optimal cuts and partitions of point multisets in tree metrics.
//!
//! Given a tree with nonnegative edge weights and a multiset of its
//! vertices, this crate finds partitions of the multiset into two sides
//! that maximize or minimize the cut value — the summed path distance over
//! all cross pairs — either over all splits (max-cut) or with prescribed
//! side sizes (bisection and (k, m−k) partition, both directions). The
//! solver is an exact polynomial-time dynamic program over a normalized
//! (rooted, binarized, leaf-mass) form of the instance, answers every split
//! size in one pass, and reconstructs witness partitions. Multisets of
//! points on the real line are covered through [`line_to_tree`].
//!
//! ```
//! use treecut_core::{line_to_tree, normalize, solve, ProblemSpec};
//!
//! let (tree, masses) = line_to_tree(&[0.0, 1.0, 2.0, 3.0]).unwrap();
//! let instance = normalize(&tree, &masses, 0).unwrap();
//! let spec = ProblemSpec::min_bisection(masses.total_mass()).unwrap();
//! let result = solve(&instance, &spec).unwrap();
//! assert_eq!(result.value, 6.0);
//! ```
//!
//! An exhaustive [`oracle`] double-checks the solver on small instances;
//! the companion CLI crate adds file formats and a command-line front end.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cut;
pub mod line;
pub mod multiset;
pub mod normalize;
pub mod oracle;
pub mod solver;
pub mod tree;

pub use cut::{cut_value_edge_decomposition, cut_value_pairwise, EvalError, Partition};
pub use line::{distinct_coordinates, line_to_tree, LineError};
pub use multiset::VertexMultiset;
pub use normalize::{normalize, Children, NormalizedInstance};
pub use oracle::{brute_force_optimum, direct_subproblem_value, OracleError};
pub use solver::{
    backtrack, fill_table, solve, DpTable, Objective, ProblemSpec, SizeConstraint, SolveError,
    SolveResult, SolveStats,
};
pub use tree::{TreeError, WeightedTree};
