//! Seeded multi-restart batches with summary statistics.
//!
//! A batch executes `restarts` independent runs; run `r` uses seed
//! `base_seed + r` (wrapping). Runs may be dispatched to a worker pool, but
//! every run owns its generator and state, aggregation happens after all
//! runs complete, and output is ordered by seed, so the summary is identical
//! for any worker count.

use std::path::PathBuf;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::penalty::FeasibilityReport;
use crate::problems::{self, ConstrainedProblem};
use crate::report::{write_trace, ReportFormat};
use crate::search::{run_bas, RunConfig, RunRecord, Sense, TraceRow};

/// Batch-level configuration: which problem, how many restarts, and how the
/// results leave the process.
#[derive(Debug, Clone, PartialEq)]
pub struct BatchConfig {
    /// Registry name of the problem to run.
    pub problem: String,
    /// Per-run template; its `seed` field is overridden per restart.
    pub template: RunConfig,
    /// Number of independent runs, at least 1.
    pub restarts: usize,
    /// Seed of run 0; run `r` uses `base_seed + r`.
    pub base_seed: u64,
    /// Report serialization format.
    pub format: ReportFormat,
    /// Where to write the best run's per-iteration trace, if anywhere.
    pub trace_path: Option<PathBuf>,
    /// Worker threads for dispatching runs; results are identical for any
    /// value.
    pub workers: usize,
}

impl BatchConfig {
    /// Batch on a named problem with default run parameters, one worker, and
    /// JSON output.
    pub fn new(problem: impl Into<String>, restarts: usize, base_seed: u64) -> Self {
        Self {
            problem: problem.into(),
            template: RunConfig::default(),
            restarts,
            base_seed,
            format: ReportFormat::Json,
            trace_path: None,
            workers: 1,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidConfig("restarts must be at least 1".into()));
        }
        if self.workers == 0 {
            return Err(Error::InvalidConfig("workers must be at least 1".into()));
        }
        self.template.validate()
    }
}

/// Per-run slice of the summary.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunOutcome {
    /// Restart index, 0-based.
    pub run: usize,
    /// Seed the run used.
    pub seed: u64,
    /// Whether the run's best point satisfies every constraint.
    pub feasible: bool,
    /// Raw objective at the run's best point.
    pub best_f: f64,
    /// Penalized fitness at the run's best point (minimized quantity).
    pub best_penalized: f64,
}

/// Statistics over the feasible runs' best objective values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FeasibleStats {
    pub feasible_runs: usize,
    pub best_f: f64,
    pub worst_f: f64,
    pub mean_f: f64,
    pub median_f: f64,
    /// Sample standard deviation; 0 for a single feasible run.
    pub std_f: f64,
}

/// The winning solution across all restarts, laid out like a benchmark table
/// row: design variables, constraint values, then the objective.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BestSolution {
    /// Physical design variables.
    pub x: Vec<f64>,
    /// Constraint values at `x`.
    pub g: Vec<f64>,
    /// Raw objective at `x`.
    pub f_star: f64,
    /// Penalized fitness at `x`.
    pub penalized: f64,
    /// Whether `x` satisfies every constraint.
    pub feasible: bool,
    /// Restart that produced it.
    pub run: usize,
    /// Seed of that restart.
    pub seed: u64,
    /// Full feasibility breakdown.
    pub feasibility: FeasibilityReport,
}

/// Aggregated batch result.
///
/// Equality ignores `run_seconds` and `best_trace`: the former is wall-clock
/// noise, the latter is skipped by serialization. Everything else is a pure
/// function of `(problem, template, base_seed, restarts)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BatchSummary {
    pub problem: String,
    pub restarts: usize,
    pub base_seed: u64,
    /// Template echo with `seed = base_seed`.
    pub config: RunConfig,
    /// One entry per restart, ordered by seed.
    pub runs: Vec<RunOutcome>,
    /// Restarts whose best point violates a constraint.
    pub infeasible_runs: usize,
    /// Present when at least one run was feasible.
    pub stats: Option<FeasibleStats>,
    /// Best feasible solution, or the least-penalized one when no run was
    /// feasible.
    pub best: BestSolution,
    /// Wall-clock seconds per run, ordered by seed.
    pub run_seconds: Vec<f64>,
    /// Per-iteration trace of the winning run; also written to
    /// `trace_path` when one is configured.
    #[serde(skip)]
    pub best_trace: Vec<TraceRow>,
}

impl PartialEq for BatchSummary {
    fn eq(&self, other: &Self) -> bool {
        self.problem == other.problem
            && self.restarts == other.restarts
            && self.base_seed == other.base_seed
            && self.config == other.config
            && self.runs == other.runs
            && self.infeasible_runs == other.infeasible_runs
            && self.stats == other.stats
            && self.best == other.best
    }
}

impl BatchSummary {
    /// True when at least one restart found a feasible point.
    pub fn any_feasible(&self) -> bool {
        self.stats.is_some()
    }
}

/// Resolves `config.problem` through the registry and runs the batch.
pub fn run_batch(config: &BatchConfig) -> Result<BatchSummary> {
    let problem = problems::by_name(&config.problem)?;
    run_batch_on(&problem, config)
}

/// Runs the batch against an explicit problem (for problems outside the
/// registry). `config.problem` is used only as the summary label.
pub fn run_batch_on(problem: &ConstrainedProblem, config: &BatchConfig) -> Result<BatchSummary> {
    config.validate()?;
    let n = config.restarts;
    let slots: Mutex<Vec<Option<(RunRecord, f64)>>> = Mutex::new((0..n).map(|_| None).collect());
    let errors: Mutex<Vec<(usize, Error)>> = Mutex::new(Vec::new());
    let next = AtomicUsize::new(0);

    std::thread::scope(|scope| {
        for _ in 0..config.workers.min(n) {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::Relaxed);
                if index >= n {
                    break;
                }
                let run_config = RunConfig {
                    seed: config.base_seed.wrapping_add(index as u64),
                    ..config.template.clone()
                };
                let started = Instant::now();
                match run_bas(problem, &run_config) {
                    Ok(record) => {
                        slots.lock().unwrap()[index] =
                            Some((record, started.elapsed().as_secs_f64()));
                    }
                    Err(err) => errors.lock().unwrap().push((index, err)),
                }
            });
        }
    });

    // Report the lowest-index failure so the error is deterministic.
    let mut errors = errors.into_inner().unwrap();
    errors.sort_by_key(|(index, _)| *index);
    if let Some((index, source)) = errors.into_iter().next() {
        return Err(Error::RunFailed {
            seed: config.base_seed.wrapping_add(index as u64),
            source: Box::new(source),
        });
    }

    let mut records = Vec::with_capacity(n);
    let mut run_seconds = Vec::with_capacity(n);
    for slot in slots.into_inner().unwrap() {
        let (record, seconds) = slot.expect("every run completed");
        records.push(record);
        run_seconds.push(seconds);
    }

    let summary = summarize(problem, config, records, run_seconds);
    if let Some(path) = &config.trace_path {
        write_trace(path, &summary.best_trace)?;
    }
    Ok(summary)
}

fn summarize(
    problem: &ConstrainedProblem,
    config: &BatchConfig,
    records: Vec<RunRecord>,
    run_seconds: Vec<f64>,
) -> BatchSummary {
    let sense = problem.sense();
    let runs: Vec<RunOutcome> = records
        .iter()
        .enumerate()
        .map(|(run, record)| RunOutcome {
            run,
            seed: record.seed,
            feasible: record.feasibility.feasible,
            best_f: record.best_objective,
            best_penalized: record.best_penalized,
        })
        .collect();

    let feasible_f: Vec<f64> = runs
        .iter()
        .filter(|r| r.feasible)
        .map(|r| r.best_f)
        .collect();
    let infeasible_runs = runs.len() - feasible_f.len();
    let stats = feasible_stats(&feasible_f, sense);

    // Winner: best objective among feasible runs when any exist, otherwise
    // the least-penalized run. Ties go to the earliest seed.
    let best_index = if feasible_f.is_empty() {
        pick_min(runs.iter().map(|r| r.best_penalized))
    } else {
        let oriented = |f: f64| match sense {
            Sense::Minimize => f,
            Sense::Maximize => -f,
        };
        pick_min(runs.iter().map(|r| {
            if r.feasible {
                oriented(r.best_f)
            } else {
                f64::INFINITY
            }
        }))
    };
    let winner = &records[best_index];
    let best = BestSolution {
        x: winner.best_physical.clone(),
        g: winner.feasibility.values.clone(),
        f_star: winner.best_objective,
        penalized: winner.best_penalized,
        feasible: winner.feasibility.feasible,
        run: best_index,
        seed: winner.seed,
        feasibility: winner.feasibility.clone(),
    };

    BatchSummary {
        problem: config.problem.clone(),
        restarts: config.restarts,
        base_seed: config.base_seed,
        config: RunConfig {
            seed: config.base_seed,
            ..config.template.clone()
        },
        runs,
        infeasible_runs,
        stats,
        best,
        run_seconds,
        best_trace: winner.trace.clone(),
    }
}

fn pick_min(values: impl Iterator<Item = f64>) -> usize {
    let mut best = 0;
    let mut best_value = f64::INFINITY;
    for (index, value) in values.enumerate() {
        if value < best_value {
            best_value = value;
            best = index;
        }
    }
    best
}

fn feasible_stats(feasible_f: &[f64], sense: Sense) -> Option<FeasibleStats> {
    if feasible_f.is_empty() {
        return None;
    }
    let mut sorted = feasible_f.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).expect("finite objective"));
    let n = sorted.len();
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0
    };
    let mean = sorted.iter().sum::<f64>() / n as f64;
    let std = if n > 1 {
        let var = sorted.iter().map(|f| (f - mean).powi(2)).sum::<f64>() / (n - 1) as f64;
        var.sqrt()
    } else {
        0.0
    };
    let (best, worst) = match sense {
        Sense::Minimize => (sorted[0], sorted[n - 1]),
        Sense::Maximize => (sorted[n - 1], sorted[0]),
    };
    Some(FeasibleStats {
        feasible_runs: n,
        best_f: best,
        worst_f: worst,
        mean_f: mean,
        median_f: median,
        std_f: std,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sphere_batch(restarts: usize, workers: usize) -> BatchConfig {
        BatchConfig {
            template: RunConfig {
                max_iterations: 60,
                ..RunConfig::default()
            },
            workers,
            ..BatchConfig::new("sphere", restarts, 0)
        }
    }

    #[test]
    fn single_restart_summary_mirrors_the_run() {
        let config = sphere_batch(1, 1);
        let summary = run_batch(&config).unwrap();
        let problem = problems::sphere(4).unwrap();
        let record = run_bas(
            &problem,
            &RunConfig {
                seed: 0,
                ..config.template.clone()
            },
        )
        .unwrap();
        assert_eq!(summary.runs.len(), 1);
        assert_eq!(summary.best.f_star, record.best_objective);
        assert_eq!(summary.best.x, record.best_physical);
        assert_eq!(summary.stats.unwrap().best_f, record.best_objective);
    }

    #[test]
    fn sphere_batch_finds_the_minimum_easily() {
        let mut config = BatchConfig::new("sphere", 10, 0);
        config.template.max_iterations = 100;
        config.workers = 2;
        let summary = run_batch(&config).unwrap();
        assert!(summary.runs.iter().all(|r| r.feasible));
        assert!(
            summary.best.f_star < 1e-2,
            "best {} not below 1e-2",
            summary.best.f_star
        );
    }

    #[test]
    fn batches_are_deterministic() {
        let config = sphere_batch(6, 2);
        let a = run_batch(&config).unwrap();
        let b = run_batch(&config).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn summary_is_independent_of_worker_count() {
        let single = run_batch(&sphere_batch(8, 1)).unwrap();
        for workers in [2usize, 4, 8, 16] {
            let pooled = run_batch(&sphere_batch(8, workers)).unwrap();
            assert_eq!(single, pooled, "workers={workers}");
            assert_eq!(single.best_trace, pooled.best_trace);
            assert_eq!(single.runs, pooled.runs);
        }
    }

    #[test]
    fn seeds_derive_from_base_seed() {
        let mut config = sphere_batch(4, 1);
        config.base_seed = 1000;
        let summary = run_batch(&config).unwrap();
        let seeds: Vec<u64> = summary.runs.iter().map(|r| r.seed).collect();
        assert_eq!(seeds, vec![1000, 1001, 1002, 1003]);
    }

    #[test]
    fn stats_are_ordered_over_feasible_runs() {
        let summary = run_batch(&sphere_batch(10, 3)).unwrap();
        let stats = summary.stats.unwrap();
        assert_eq!(stats.feasible_runs, 10);
        assert_eq!(summary.infeasible_runs, 0);
        assert!(stats.best_f <= stats.median_f);
        assert!(stats.median_f <= stats.worst_f);
        assert!(stats.std_f >= 0.0);
        let min = summary
            .runs
            .iter()
            .map(|r| r.best_f)
            .fold(f64::INFINITY, f64::min);
        assert_eq!(stats.best_f, min);
        assert_eq!(summary.best.f_star, min);
    }

    #[test]
    fn unknown_problem_lists_the_registry() {
        let config = BatchConfig::new("nope", 1, 0);
        match run_batch(&config).unwrap_err() {
            Error::UnknownProblem { known, .. } => assert!(known.contains("sphere")),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn zero_restarts_and_zero_workers_are_rejected() {
        let mut config = sphere_batch(0, 1);
        assert!(run_batch(&config).is_err());
        config.restarts = 1;
        config.workers = 0;
        assert!(run_batch(&config).is_err());
    }

    #[test]
    fn failing_runs_abort_with_the_offending_seed() {
        let space = crate::space::SearchSpace::uniform_box(2, 0.0, 1.0).unwrap();
        let problem = ConstrainedProblem::new(
            "nan-objective",
            space,
            Box::new(|_x: &[f64]| f64::NAN),
            crate::penalty::ConstraintSet::none(),
            Sense::Minimize,
        );
        let mut config = BatchConfig::new("nan-objective", 3, 42);
        config.template.max_iterations = 5;
        match run_batch_on(&problem, &config).unwrap_err() {
            Error::RunFailed { seed, .. } => assert_eq!(seed, 42),
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn best_trace_matches_the_reported_best_run() {
        let summary = run_batch(&sphere_batch(5, 2)).unwrap();
        let problem = problems::sphere(4).unwrap();
        let record = run_bas(
            &problem,
            &RunConfig {
                seed: summary.best.seed,
                max_iterations: 60,
                ..RunConfig::default()
            },
        )
        .unwrap();
        assert_eq!(summary.best_trace, record.trace);
    }
}
