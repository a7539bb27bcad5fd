//! Exhaustive reference solvers used to validate the dynamic program.
//!
//! Both functions stay deliberately naive: they enumerate every
//! distinguishable assignment and score it straight from the definitions.
//! Copies at one vertex are interchangeable, so the enumeration runs over
//! per-vertex side-A counts rather than labeled elements; that shrinks the
//! space without changing the optimum. Hard size caps make oversized calls
//! fail loudly instead of hanging.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cut::Partition;
use crate::multiset::VertexMultiset;
use crate::normalize::{Children, NormalizedInstance};
use crate::solver::{Objective, ProblemSpec, SizeConstraint};
use crate::tree::WeightedTree;

/// Largest total mass [`brute_force_optimum`] accepts.
pub const MAX_ORACLE_MASS: usize = 20;
/// Largest subtree mass [`direct_subproblem_value`] accepts.
pub const MAX_ORACLE_SUBTREE_MASS: usize = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    /// The instance exceeds the enumeration caps.
    InstanceTooLargeForOracle,
    /// No assignment satisfies the requested side sizes.
    InfeasibleSizes,
    /// The queried cell lies outside the subproblem's feasible ranges.
    CellOutOfRange,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::InstanceTooLargeForOracle => {
                write!(f, "instance too large for exhaustive verification")
            }
            OracleError::InfeasibleSizes => write!(f, "no assignment has the requested sizes"),
            OracleError::CellOutOfRange => write!(f, "subproblem cell out of range"),
        }
    }
}

impl core::error::Error for OracleError {}

/// Calls `visit` with every count vector `0 <= counts[i] <= caps[i]`, in
/// ascending lexicographic order. Returns the number of vectors visited.
fn for_each_count_vector(caps: &[usize], mut visit: impl FnMut(&[usize])) -> u64 {
    let mut counts = vec![0usize; caps.len()];
    let mut visited = 0u64;
    loop {
        visit(&counts);
        visited += 1;
        // Odometer increment from the rightmost position.
        let mut i = caps.len();
        loop {
            if i == 0 {
                return visited;
            }
            i -= 1;
            if counts[i] < caps[i] {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
        }
    }
}

/// Exhaustive optimum over all distinguishable partitions.
///
/// Returns the optimal value and the witness with the lexicographically
/// smallest side-A count vector. Requires total mass at most
/// [`MAX_ORACLE_MASS`].
pub fn brute_force_optimum(
    tree: &WeightedTree,
    masses: &VertexMultiset,
    spec: &ProblemSpec,
) -> Result<(f64, Partition), OracleError> {
    let m = masses.total_mass();
    if m > MAX_ORACLE_MASS {
        return Err(OracleError::InstanceTooLargeForOracle);
    }
    let required = match spec.constraint {
        SizeConstraint::AnySplit => None,
        SizeConstraint::ExactSizes(k) => {
            if k > m {
                return Err(OracleError::InfeasibleSizes);
            }
            Some(k)
        }
    };

    let support: Vec<(usize, usize)> = masses.support().collect();
    let caps: Vec<usize> = support.iter().map(|&(_, mult)| mult).collect();
    let dist: Vec<Vec<f64>> = support
        .iter()
        .map(|&(u, _)| {
            let all = tree.distances_from(u).expect("support vertex in range");
            support.iter().map(|&(v, _)| all[v]).collect()
        })
        .collect();

    let mut best: Option<(f64, Vec<usize>)> = None;
    let visited = for_each_count_vector(&caps, |counts| {
        if let Some(k) = required {
            if counts.iter().sum::<usize>() != k {
                return;
            }
        }
        let mut value = 0.0;
        for i in 0..support.len() {
            let (a_i, b_i) = (counts[i] as f64, (caps[i] - counts[i]) as f64);
            for j in i + 1..support.len() {
                let (a_j, b_j) = (counts[j] as f64, (caps[j] - counts[j]) as f64);
                value += (a_i * b_j + b_i * a_j) * dist[i][j];
            }
        }
        let better = match &best {
            None => true,
            Some((incumbent, _)) => match spec.objective {
                Objective::Maximize => value > *incumbent,
                Objective::Minimize => value < *incumbent,
            },
        };
        if better {
            best = Some((value, counts.to_vec()));
        }
    });
    debug_assert_eq!(
        visited,
        caps.iter().map(|&c| c as u64 + 1).product::<u64>(),
        "enumeration must cover every count vector"
    );

    // Every k in 0..=m is realizable, so a required size always matches.
    let (value, counts) = best.expect("enumeration visits at least one vector");
    let mut side_a = vec![0usize; masses.vertex_count()];
    for (&(v, _), &a) in support.iter().zip(&counts) {
        side_a[v] = a;
    }
    let witness = Partition::new(masses, side_a).expect("counts respect multiplicities");
    Ok((value, witness))
}

/// Scores one solver subproblem straight from its definition.
///
/// Enumerates the splits of the subtree of `v` into `p` side-A and
/// `c_v - p` side-B elements and returns the optimal total of in-subtree
/// cross-pair path weight, `t` times the A-to-`v` path weight, and `s`
/// times the B-to-`v` path weight, with `t = (m - c_v) - s`.
pub fn direct_subproblem_value(
    inst: &NormalizedInstance,
    v: usize,
    p: usize,
    s: usize,
    objective: Objective,
) -> Result<f64, OracleError> {
    if v >= inst.vertex_count() {
        return Err(OracleError::CellOutOfRange);
    }
    let c = inst.subtree_mass(v);
    let m = inst.total_mass();
    if c > MAX_ORACLE_SUBTREE_MASS {
        return Err(OracleError::InstanceTooLargeForOracle);
    }
    if p > c || s > m - c {
        return Err(OracleError::CellOutOfRange);
    }
    let t = (m - c - s) as f64;

    // Mass-carrying leaves under `v`, with their distances to `v` and to
    // each other.
    let mut carriers: Vec<(usize, usize)> = Vec::new();
    let mut stack = vec![v];
    while let Some(u) = stack.pop() {
        if inst.leaf_mass(u) > 0 {
            carriers.push((u, inst.leaf_mass(u)));
        }
        match inst.children(u) {
            Children::None => {}
            Children::One(c1) => stack.push(c1),
            Children::Two(c1, c2) => {
                stack.push(c1);
                stack.push(c2);
            }
        }
    }
    let caps: Vec<usize> = carriers.iter().map(|&(_, mult)| mult).collect();
    let to_v: Vec<f64> = carriers
        .iter()
        .map(|&(x, _)| inst.distance(x, v).expect("vertex in range"))
        .collect();
    let pairwise: Vec<Vec<f64>> = carriers
        .iter()
        .map(|&(x, _)| {
            carriers
                .iter()
                .map(|&(y, _)| inst.distance(x, y).expect("vertex in range"))
                .collect()
        })
        .collect();

    let mut best: Option<f64> = None;
    for_each_count_vector(&caps, |counts| {
        if counts.iter().sum::<usize>() != p {
            return;
        }
        let mut value = 0.0;
        for i in 0..carriers.len() {
            let (a_i, b_i) = (counts[i] as f64, (caps[i] - counts[i]) as f64);
            value += t * a_i * to_v[i] + (s as f64) * b_i * to_v[i];
            for j in i + 1..carriers.len() {
                let (a_j, b_j) = (counts[j] as f64, (caps[j] - counts[j]) as f64);
                value += (a_i * b_j + b_i * a_j) * pairwise[i][j];
            }
        }
        let better = match best {
            None => true,
            Some(incumbent) => match objective {
                Objective::Maximize => value > incumbent,
                Objective::Minimize => value < incumbent,
            },
        };
        if better {
            best = Some(value);
        }
    });
    // p <= c guarantees at least one split of the right size.
    Ok(best.expect("some assignment attains size p"))
}
