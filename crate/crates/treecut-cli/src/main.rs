//! Command-line front end for the tree-metric cut and partition solver.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 parse/validation/flag
//! errors, 3 infeasible problem (odd mass for a bisection, size out of
//! range).

use treecut_cli::{bench, formats, generate, report, verify};

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use treecut_core::{
    backtrack, cut_value_pairwise, distinct_coordinates, fill_table, line_to_tree, normalize,
    oracle::MAX_ORACLE_MASS, solve, Objective, ProblemSpec, VertexMultiset, WeightedTree,
};

use generate::Shape;
use report::{InstanceSummary, RunReport, SideCount, SolverInfo, Timings};

#[derive(Parser)]
#[command(
    name = "treecut",
    version,
    about = "Exact optimal cuts and partitions of point multisets in tree metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a cut or partition problem on an instance file
    Solve(SolveArgs),
    /// Cross-check the solver against exhaustive enumeration
    Verify(VerifyArgs),
    /// Generate a deterministic random instance
    Gen(GenArgs),
    /// Time solves across instance sizes and print CSV
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tree,
    Points,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    MaxCut,
    MaxPartition,
    MinPartition,
    MaxBisection,
    MinBisection,
}

impl Variant {
    fn name(self) -> &'static str {
        match self {
            Variant::MaxCut => "max-cut",
            Variant::MaxPartition => "max-partition",
            Variant::MinPartition => "min-partition",
            Variant::MaxBisection => "max-bisection",
            Variant::MinBisection => "min-bisection",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputMode {
    Text,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file to solve
    #[arg(long)]
    input: PathBuf,
    /// Input format
    #[arg(long, value_enum)]
    format: Format,
    /// Problem variant
    #[arg(long, value_enum)]
    variant: Variant,
    /// Side-A size, required for max-partition/min-partition
    #[arg(long)]
    k: Option<usize>,
    /// Include the optimal value for every split size in the report
    #[arg(long)]
    all_k: bool,
    #[arg(long, value_enum, default_value = "text")]
    output: OutputMode,
    /// Accepted for flag uniformity; solving is deterministic
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance file to verify (alternative to --random)
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Verify a batch of generated instances instead of a file
    #[arg(long)]
    random: bool,
    /// Number of random instances
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Largest vertex count for random instances
    #[arg(long, default_value_t = 7)]
    max_n: usize,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long = "type", value_enum)]
    shape: GenShape,
    #[arg(long)]
    n: usize,
    /// Edge weights are uniform integers in 0..=max-weight
    #[arg(long, default_value_t = 10)]
    max_weight: u64,
    /// Multiplicities are uniform integers in 1..=max-mult
    #[arg(long, default_value_t = 1)]
    max_mult: usize,
    #[arg(long)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenShape {
    RandomTree,
    Path,
    Star,
    Caterpillar,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated instance sizes
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, value_enum, default_value = "max-cut")]
    variant: Variant,
    /// Side-A size for the partition variants
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
}

/// Failures mapped to process exit codes.
enum CliError {
    /// Bad flag combinations: exit 2.
    Usage(String),
    /// Unreadable or invalid input: exit 2.
    Parse(String),
    /// Structurally impossible request: exit 3.
    Infeasible(String),
}

impl CliError {
    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Parse(m) | CliError::Infeasible(m) => m,
        }
    }

    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => ExitCode::from(2),
            CliError::Infeasible(_) => ExitCode::from(3),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

/// Resolves a variant and optional `--k` into a problem spec for total
/// mass `m`, along with the realized side-A size when fixed.
fn resolve_spec(
    variant: Variant,
    k: Option<usize>,
    m: usize,
) -> Result<(ProblemSpec, Option<usize>), CliError> {
    match variant {
        Variant::MaxPartition | Variant::MinPartition => {
            let k = k.ok_or_else(|| {
                CliError::Usage(format!("--k is required for --variant {}", variant.name()))
            })?;
            if k > m {
                return Err(CliError::Infeasible(format!(
                    "k = {k} exceeds the total mass {m}"
                )));
            }
            let spec = match variant {
                Variant::MaxPartition => ProblemSpec::max_partition(k),
                _ => ProblemSpec::min_partition(k),
            };
            Ok((spec, Some(k)))
        }
        Variant::MaxCut | Variant::MaxBisection | Variant::MinBisection => {
            if k.is_some() {
                return Err(CliError::Usage(format!(
                    "--k is not accepted for --variant {}",
                    variant.name()
                )));
            }
            match variant {
                Variant::MaxCut => Ok((ProblemSpec::max_cut(), None)),
                Variant::MaxBisection => ProblemSpec::max_bisection(m)
                    .map(|s| (s, Some(m / 2)))
                    .map_err(|_| {
                        CliError::Infeasible(format!(
                            "bisection requires an even total mass, got m = {m}"
                        ))
                    }),
                _ => ProblemSpec::min_bisection(m)
                    .map(|s| (s, Some(m / 2)))
                    .map_err(|_| {
                        CliError::Infeasible(format!(
                            "bisection requires an even total mass, got m = {m}"
                        ))
                    }),
            }
        }
    }
}

fn read_instance(
    path: &PathBuf,
    format: Format,
) -> Result<(WeightedTree, VertexMultiset, Option<Vec<f64>>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    match format {
        Format::Tree => {
            let (tree, masses) =
                formats::parse_instance(&text).map_err(|e| CliError::Parse(e.0))?;
            Ok((tree, masses, None))
        }
        Format::Points => {
            let points = formats::parse_points(&text).map_err(|e| CliError::Parse(e.0))?;
            let coordinates = distinct_coordinates(&points)
                .map_err(|e| CliError::Parse(e.to_string()))?
                .into_iter()
                .map(|(c, _)| c)
                .collect();
            let (tree, masses) =
                line_to_tree(&points).map_err(|e| CliError::Parse(e.to_string()))?;
            Ok((tree, masses, Some(coordinates)))
        }
    }
}

/// Smallest split size attaining the optimum under `objective`.
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

fn cmd_solve(args: SolveArgs) -> Result<ExitCode, CliError> {
    let (tree, masses, coordinates) = read_instance(&args.input, args.format)?;
    let m = masses.total_mass();
    let (spec, fixed_k) = resolve_spec(args.variant, args.k, m)?;

    let start = Instant::now();
    let inst = normalize(&tree, &masses, 0).expect("parsed instances have a vertex 0");
    let normalize_ms = start.elapsed().as_secs_f64() * 1e3;

    let start = Instant::now();
    let (table, _stats) = fill_table(&inst, spec.objective);
    let values_by_k = table.root_values();
    let solve_ms = start.elapsed().as_secs_f64() * 1e3;

    let k = fixed_k.unwrap_or_else(|| best_split(&values_by_k, spec.objective));
    let start = Instant::now();
    let partition = backtrack(&inst, &table, k).expect("k is within range");
    let backtrack_ms = start.elapsed().as_secs_f64() * 1e3;
    let value = values_by_k[k];

    // The report must re-evaluate: a failure here is a solver bug.
    let reevaluated = cut_value_pairwise(&tree, &partition).expect("partition matches tree");
    let tol = 1e-9 * value.abs().max(reevaluated.abs()).max(1.0);
    assert!(
        (reevaluated - value).abs() <= tol,
        "internal error: reported value {value} but partition evaluates to {reevaluated}"
    );

    let sides = masses
        .support()
        .map(|(v, _)| SideCount {
            vertex: v,
            coordinate: coordinates.as_ref().map(|c| c[v]),
            side_a: partition.side_a()[v],
            side_b: partition.side_b()[v],
        })
        .collect();
    let report = RunReport {
        schema: 1,
        instance: InstanceSummary {
            mode: match args.format {
                Format::Tree => "tree",
                Format::Points => "points",
            },
            vertices: tree.vertex_count(),
            total_mass: m,
            coordinates,
        },
        variant: args.variant.name().to_string(),
        k,
        value,
        sides,
        values_by_k: args.all_k.then_some(values_by_k),
        timings_ms: Timings {
            normalize: normalize_ms,
            solve: solve_ms,
            backtrack: backtrack_ms,
        },
        solver: SolverInfo::default(),
    };
    match args.output {
        OutputMode::Json => println!("{}", report.to_json()),
        OutputMode::Text => print!("{}", report.to_text()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, CliError> {
    let solver = |i: &treecut_core::NormalizedInstance, s: &ProblemSpec| solve(i, s);
    if args.random {
        let seed = args
            .seed
            .ok_or_else(|| CliError::Usage("--seed is required with --random".into()))?;
        if args.max_n == 0 {
            return Err(CliError::Usage("--max-n must be at least 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut checks = 0;
        for trial in 0..args.trials {
            let (tree, masses) = generate::generate_verification_instance(&mut rng, args.max_n);
            match verify::verify_instance(&tree, &masses, &solver) {
                Ok(c) => checks += c,
                Err(mismatch) => {
                    println!("{mismatch}");
                    println!("FAIL at trial {trial} (seed {seed})");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        println!(
            "PASS: {} random instances, {checks} checks, seed {seed}",
            args.trials
        );
        Ok(ExitCode::SUCCESS)
    } else {
        let input = args
            .input
            .ok_or_else(|| CliError::Usage("either --input or --random is required".into()))?;
        let format = args
            .format
            .ok_or_else(|| CliError::Usage("--format is required with --input".into()))?;
        let (tree, masses, _) = read_instance(&input, format)?;
        if masses.total_mass() > MAX_ORACLE_MASS {
            return Err(CliError::Parse(format!(
                "instance mass {} exceeds the oracle cap {MAX_ORACLE_MASS}",
                masses.total_mass()
            )));
        }
        match verify::verify_instance(&tree, &masses, &solver) {
            Ok(checks) => {
                println!("PASS: 1 instance, {checks} checks");
                Ok(ExitCode::SUCCESS)
            }
            Err(mismatch) => {
                println!("{mismatch}");
                println!("FAIL");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, CliError> {
    if args.n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    if args.max_mult == 0 {
        return Err(CliError::Usage("--max-mult must be at least 1".into()));
    }
    let shape = match args.shape {
        GenShape::RandomTree => Shape::RandomTree,
        GenShape::Path => Shape::Path,
        GenShape::Star => Shape::Star,
        GenShape::Caterpillar => Shape::Caterpillar,
    };
    let (tree, masses) =
        generate::generate(shape, args.n, args.max_weight, args.max_mult, args.seed);
    let shape_name = match args.shape {
        GenShape::RandomTree => "random-tree",
        GenShape::Path => "path",
        GenShape::Star => "star",
        GenShape::Caterpillar => "caterpillar",
    };
    println!(
        "# treecut gen --type {shape_name} --n {} --max-weight {} --max-mult {} --seed {}",
        args.n, args.max_weight, args.max_mult, args.seed
    );
    print!("{}", formats::instance_to_text(&tree, &masses));
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(args: BenchArgs) -> Result<ExitCode, CliError> {
    if args.sizes.contains(&0) {
        return Err(CliError::Usage("sizes must be at least 1".into()));
    }
    if args.repeats == 0 {
        return Err(CliError::Usage("--repeats must be at least 1".into()));
    }
    // Bench instances are sets, so the total mass equals the size.
    let spec_of: Box<dyn Fn(usize) -> ProblemSpec> = match args.variant {
        Variant::MaxCut => {
            if args.k.is_some() {
                return Err(CliError::Usage("--k is not accepted for max-cut".into()));
            }
            Box::new(|_| ProblemSpec::max_cut())
        }
        Variant::MaxBisection | Variant::MinBisection => {
            if args.k.is_some() {
                return Err(CliError::Usage("--k is not accepted for bisections".into()));
            }
            if let Some(&odd) = args.sizes.iter().find(|&&n| n % 2 != 0) {
                return Err(CliError::Usage(format!(
                    "bisection benchmarks need even sizes, got {odd}"
                )));
            }
            match args.variant {
                Variant::MaxBisection => {
                    Box::new(|n| ProblemSpec::max_bisection(n).expect("sizes are even"))
                }
                _ => Box::new(|n| ProblemSpec::min_bisection(n).expect("sizes are even")),
            }
        }
        Variant::MaxPartition | Variant::MinPartition => {
            let k = args.k.ok_or_else(|| {
                CliError::Usage(format!("--k is required for {}", args.variant.name()))
            })?;
            if let Some(&small) = args.sizes.iter().find(|&&n| n < k) {
                return Err(CliError::Usage(format!(
                    "k = {k} exceeds benchmark size {small}"
                )));
            }
            match args.variant {
                Variant::MaxPartition => Box::new(move |_| ProblemSpec::max_partition(k)),
                _ => Box::new(move |_| ProblemSpec::min_partition(k)),
            }
        }
    };
    let rows = bench::run(&args.sizes, &*spec_of, args.seed, args.repeats);
    print!("{}", bench::to_csv(&rows));
    Ok(ExitCode::SUCCESS)
}
