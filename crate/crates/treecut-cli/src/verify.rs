//! Cross-checking the dynamic program against the exhaustive oracle.
//!
//! Every instance is checked on all five problem variants and, for the
//! fixed-size variants, every feasible side size. Values are compared
//! exactly when all edge weights are integers and within a relative 1e-9
//! otherwise; each reconstructed partition must re-evaluate to its
//! reported value at the same precision.

use treecut_core::{
    brute_force_optimum, cut_value_pairwise, normalize, oracle::MAX_ORACLE_MASS,
    NormalizedInstance, ProblemSpec, SolveError, SolveResult, VertexMultiset, WeightedTree,
};

use crate::formats::instance_to_text;

/// A solver under test: same contract as [`treecut_core::solve`].
pub type SolverFn<'a> =
    &'a dyn Fn(&NormalizedInstance, &ProblemSpec) -> Result<SolveResult, SolveError>;

/// First observed disagreement, with the instance reproduced verbatim.
#[derive(Debug)]
pub struct Mismatch {
    pub variant: String,
    pub solver_value: Option<f64>,
    pub oracle_value: f64,
    pub detail: String,
    pub instance_text: String,
}

impl std::fmt::Display for Mismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "MISMATCH on {}: {}", self.variant, self.detail)?;
        match self.solver_value {
            Some(v) => writeln!(f, "  solver value: {v}")?,
            None => writeln!(f, "  solver value: <error>")?,
        }
        writeln!(f, "  oracle value: {}", self.oracle_value)?;
        writeln!(f, "offending instance (re-runnable, tree format):")?;
        write!(f, "{}", self.instance_text)
    }
}

fn values_agree(a: f64, b: f64, exact: bool) -> bool {
    if exact || a == b {
        return a == b;
    }
    let scale = a.abs().max(b.abs());
    (a - b).abs() <= 1e-9 * scale
}

fn all_integer_weights(tree: &WeightedTree) -> bool {
    tree.edges().iter().all(|&(_, _, w)| w.fract() == 0.0)
}

/// All variant/size combinations for an instance of total mass `m`.
fn check_plan(m: usize) -> Vec<(String, ProblemSpec)> {
    let mut plan = vec![("max-cut".to_string(), ProblemSpec::max_cut())];
    for k in 0..=m {
        plan.push((
            format!("max-partition k={k}"),
            ProblemSpec::max_partition(k),
        ));
        plan.push((
            format!("min-partition k={k}"),
            ProblemSpec::min_partition(k),
        ));
    }
    if m.is_multiple_of(2) {
        plan.push((
            "max-bisection".to_string(),
            ProblemSpec::max_bisection(m).unwrap(),
        ));
        plan.push((
            "min-bisection".to_string(),
            ProblemSpec::min_bisection(m).unwrap(),
        ));
    }
    plan
}

/// Runs the full check plan on one instance. Returns the number of checks
/// performed, or the first mismatch.
pub fn verify_instance(
    tree: &WeightedTree,
    masses: &VertexMultiset,
    solver: SolverFn,
) -> Result<u64, Box<Mismatch>> {
    debug_assert!(masses.total_mass() <= MAX_ORACLE_MASS);
    let exact = all_integer_weights(tree);
    let inst = normalize(tree, masses, 0).expect("vertex 0 exists");
    let mut checks = 0;
    for (variant, spec) in check_plan(masses.total_mass()) {
        let (oracle_value, _) =
            brute_force_optimum(tree, masses, &spec).expect("instance fits within oracle caps");
        let mismatch = |solver_value: Option<f64>, detail: String| {
            Box::new(Mismatch {
                variant: variant.clone(),
                solver_value,
                oracle_value,
                detail,
                instance_text: instance_to_text(tree, masses),
            })
        };
        let result = match solver(&inst, &spec) {
            Ok(r) => r,
            Err(e) => return Err(mismatch(None, format!("solver failed: {e}"))),
        };
        if !values_agree(result.value, oracle_value, exact) {
            return Err(mismatch(
                Some(result.value),
                "solver and oracle optima differ".to_string(),
            ));
        }
        let reevaluated = cut_value_pairwise(tree, &result.partition)
            .expect("reconstructed partition matches the tree");
        if !values_agree(reevaluated, result.value, exact) {
            return Err(mismatch(
                Some(result.value),
                format!("reconstructed partition re-evaluates to {reevaluated}"),
            ));
        }
        checks += 1;
    }
    Ok(checks)
}
