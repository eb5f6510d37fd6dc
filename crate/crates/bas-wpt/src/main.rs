//! Thin command-line front end; all logic lives in the library.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bas_wpt::{
    emit_report, run_batch, verify_tables, BatchConfig, Error, FileConfig, ReportFormat, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "bas-wpt",
    version,
    about = "Derivative-free constrained optimization benchmarks with seeded, reproducible batches"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)] // one-shot parse, size is irrelevant
enum Command {
    /// Run a seeded batch of independent restarts on a named problem
    Run(RunArgs),
    /// Re-evaluate the bundled reference tables and report each cell
    VerifyTables,
    /// List the registered problem names
    ListProblems,
}

#[derive(Args)]
struct RunArgs {
    /// Problem name (see `list-problems`)
    #[arg(long)]
    problem: Option<String>,
    /// Iterations per restart
    #[arg(long)]
    iters: Option<usize>,
    /// Number of independent restarts; restart r uses seed <seed> + r
    #[arg(long)]
    restarts: Option<usize>,
    /// Base seed
    #[arg(long)]
    seed: Option<u64>,
    /// Step decay coefficient in [0, 1)
    #[arg(long)]
    c1: Option<f64>,
    /// Step-to-antenna ratio (antenna distance = step / c2)
    #[arg(long)]
    c2: Option<f64>,
    /// Initial step size in normalized units
    #[arg(long)]
    delta_init: Option<f64>,
    /// Additive step-recurrence term (step floor = delta-add / (1 - c1))
    #[arg(long, conflicts_with = "paper_exact_schedule")]
    delta_add: Option<f64>,
    /// Re-add the initial step each iteration (textbook recurrence; the step
    /// grows toward delta-init / (1 - c1) instead of annealing)
    #[arg(long)]
    paper_exact_schedule: bool,
    /// Penalty weight for constraint violations
    #[arg(long)]
    lambda: Option<f64>,
    /// Report format printed to stdout
    #[arg(long)]
    format: Option<String>,
    /// Write the best run's per-iteration trace CSV here
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Key-value config file; command-line flags override file values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker threads (results are identical for any value)
    #[arg(long)]
    workers: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run(args) => match build_batch_config(args) {
            Ok(config) => run(config),
            Err(err) => {
                eprintln!("error: {err}");
                ExitCode::from(2)
            }
        },
        Command::VerifyTables => {
            let report = verify_tables();
            print!("{}", report.render());
            if report.passed() {
                println!("verify-tables: PASS");
                ExitCode::SUCCESS
            } else {
                println!("verify-tables: FAIL ({} cells)", report.failures());
                ExitCode::from(1)
            }
        }
        Command::ListProblems => {
            for name in bas_wpt::problems::PROBLEM_NAMES {
                let problem = bas_wpt::problems::by_name(name).expect("registered problem");
                println!(
                    "{name}  ({} variables, {} constraints)",
                    problem.space().dimension(),
                    problem.constraints().len()
                );
            }
            ExitCode::SUCCESS
        }
    }
}

/// Merges defaults, config-file values, and command-line flags (in
/// increasing precedence) into a batch configuration.
fn build_batch_config(args: RunArgs) -> Result<BatchConfig, Error> {
    let file = match &args.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };

    let problem = args
        .problem
        .or(file.problem)
        .ok_or_else(|| Error::InvalidConfig("missing --problem".into()))?;
    let iters = args
        .iters
        .or(file.iters)
        .ok_or_else(|| Error::InvalidConfig("missing --iters".into()))?;
    let restarts = args
        .restarts
        .or(file.restarts)
        .ok_or_else(|| Error::InvalidConfig("missing --restarts".into()))?;
    let seed = args
        .seed
        .or(file.seed)
        .ok_or_else(|| Error::InvalidConfig("missing --seed".into()))?;

    let defaults = RunConfig::default();
    let delta_init = args
        .delta_init
        .or(file.delta_init)
        .unwrap_or(defaults.delta_init);
    let paper_exact = args.paper_exact_schedule || file.paper_exact_schedule.unwrap_or(false);
    let explicit_delta_add = args.delta_add.or(file.delta_add);
    if paper_exact && explicit_delta_add.is_some() {
        return Err(Error::InvalidConfig(
            "paper-exact-schedule conflicts with delta-add".into(),
        ));
    }
    let delta_add = if paper_exact {
        delta_init
    } else {
        explicit_delta_add.unwrap_or(defaults.delta_add)
    };

    let format = match args.format {
        Some(text) => text.parse::<ReportFormat>()?,
        None => file.format.unwrap_or(ReportFormat::Json),
    };

    Ok(BatchConfig {
        problem,
        template: RunConfig {
            max_iterations: iters,
            c1: args.c1.or(file.c1).unwrap_or(defaults.c1),
            c2: args.c2.or(file.c2).unwrap_or(defaults.c2),
            delta_init,
            delta_add,
            lambda: args.lambda.or(file.lambda).unwrap_or(defaults.lambda),
            seed,
        },
        restarts,
        base_seed: seed,
        format,
        trace_path: args.trace.or(file.trace),
        workers: args.workers.or(file.workers).unwrap_or(1),
    })
}

fn run(config: BatchConfig) -> ExitCode {
    match run_batch(&config) {
        Ok(summary) => {
            match emit_report(&summary, config.format) {
                Ok(report) => println!("{report}"),
                Err(err) => {
                    eprintln!("error: {err}");
                    return ExitCode::from(2);
                }
            }
            if summary.any_feasible() {
                ExitCode::SUCCESS
            } else {
                eprintln!("no feasible solution found in {} restarts", config.restarts);
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::RunFailed { source, .. } => exit_code_for(source),
        Error::NonFiniteObjective { .. }
        | Error::NonFiniteConstraint { .. }
        | Error::NonFiniteFitness { .. } => 3,
        _ => 2,
    }
}
