//! Derivative-free constrained optimization with a single searching agent.
//!
//! The optimizer walks a normalized unit cube, probing the fitness along a
//! random direction with two "antennae" and stepping toward the better side,
//! while an annealing schedule couples the step size to the probe distance.
//! Constraints are handled by a penalty fitness that makes violating points
//! arbitrarily unattractive. Because the walk happens in `[0, 1]^N`, no
//! problem-scale parameter tuning is needed.
//!
//! # Quick start
//!
//! ```
//! use bas_wpt::{problems, run_bas, RunConfig};
//!
//! let problem = problems::sphere(4)?;
//! let config = RunConfig { max_iterations: 200, seed: 7, ..RunConfig::default() };
//! let record = run_bas(&problem, &config)?;
//! assert!(record.feasibility.feasible);
//! assert!(record.best_objective < 0.5);
//! # Ok::<(), bas_wpt::Error>(())
//! ```
//!
//! Batches of independent seeded restarts, report emission, and the bundled
//! reference-table checks live in [`batch`], [`report`], and [`tables`]. See
//! the `examples/` directory for one runnable walkthrough per capability.

pub mod batch;
pub mod config;
pub mod error;
pub mod penalty;
pub mod problems;
pub mod report;
pub mod schedule;
pub mod search;
pub mod space;
pub mod tables;

pub use batch::{
    run_batch, run_batch_on, BatchConfig, BatchSummary, BestSolution, FeasibleStats, RunOutcome,
};
pub use config::FileConfig;
pub use error::{Error, Result};
pub use penalty::{
    penalized_fitness, split_two_sided, violation_indicator, ConstraintFn, ConstraintSet,
    FeasibilityReport,
};
pub use problems::{by_name, himmelblau, pressure_vessel, sphere, ConstrainedProblem, ObjectiveFn};
pub use report::{emit_report, trace_csv, ReportFormat};
pub use schedule::StepSchedule;
pub use search::{
    detect_step, probe_antennae, run_bas, sample_unit_direction, BeetleState, RunConfig, RunRecord,
    Sense, TraceRow, UnitVector,
};
pub use space::{SearchSpace, VariableSpec};
pub use tables::{verify_tables, TableReport};
