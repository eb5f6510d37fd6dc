//! The beetle antennae search kernel.
//!
//! A single agent walks the unit cube. Each iteration it draws a random unit
//! direction, probes the fitness a distance `d` to either side (the
//! antennae), steps `delta` toward the better side, and anneals the
//! step/antenna schedule. The best penalized fitness seen so far is tracked
//! separately; the walker itself is never reset to it.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::penalty::{penalized_fitness, FeasibilityReport};
use crate::problems::ConstrainedProblem;
use crate::schedule::StepSchedule;

/// Optimization sense of a problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Minimize,
    Maximize,
}

/// Random direction with Euclidean norm 1.
#[derive(Debug, Clone, PartialEq)]
pub struct UnitVector(Vec<f64>);

impl UnitVector {
    /// Validates that `components` has unit norm within `1e-12`.
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyDimension);
        }
        let norm = norm(&components);
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::NotUnitNorm { norm });
        }
        Ok(Self(components))
    }

    pub fn components(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Draws a direction uniformly from the unit sphere by normalizing a
/// standard-normal sample; the measure-zero zero draw is resampled.
pub fn sample_unit_direction<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Result<UnitVector> {
    if dim == 0 {
        return Err(Error::EmptyDimension);
    }
    loop {
        let v: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let n = norm(&v);
        if n.is_finite() && n > 0.0 {
            return Ok(UnitVector(v.into_iter().map(|x| x / n).collect()));
        }
    }
}

/// Evaluates the fitness at the two antenna points `x + d*b` and `x - d*b`,
/// returning `(f_right, f_left)`. The probe points are handed to `evaluate`
/// unclamped; any clamping happens inside the evaluation pipeline.
pub fn probe_antennae<E>(
    position: &[f64],
    direction: &UnitVector,
    d: f64,
    mut evaluate: E,
) -> Result<(f64, f64)>
where
    E: FnMut(&[f64]) -> Result<f64>,
{
    if d.is_nan() || d <= 0.0 {
        return Err(Error::NonPositiveStep(d));
    }
    check_same_dimension(position, direction)?;
    let b = direction.components();
    let right: Vec<f64> = position.iter().zip(b).map(|(x, bi)| x + d * bi).collect();
    let left: Vec<f64> = position.iter().zip(b).map(|(x, bi)| x - d * bi).collect();
    let f_right = checked(evaluate(&right), &right)?;
    let f_left = checked(evaluate(&left), &left)?;
    Ok((f_right, f_left))
}

fn checked(value: Result<f64>, point: &[f64]) -> Result<f64> {
    let v = value?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFiniteFitness {
            point: point.to_vec(),
        })
    }
}

fn check_same_dimension(position: &[f64], direction: &UnitVector) -> Result<()> {
    if position.len() != direction.len() {
        return Err(Error::DimensionMismatch {
            expected: position.len(),
            actual: direction.len(),
        });
    }
    Ok(())
}

/// Moves `delta` along `direction` toward the better antenna and clamps the
/// result into the unit cube. An exact probe tie leaves the position
/// unchanged (`signum(0) = 0`).
pub fn detect_step(
    position: &[f64],
    direction: &UnitVector,
    delta: f64,
    f_right: f64,
    f_left: f64,
    sense: Sense,
) -> Result<Vec<f64>> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(Error::NonPositiveStep(delta));
    }
    check_same_dimension(position, direction)?;
    let diff = f_right - f_left;
    let sign = if diff > 0.0 {
        1.0
    } else if diff < 0.0 {
        -1.0
    } else {
        0.0
    };
    let orientation = match sense {
        Sense::Minimize => -1.0,
        Sense::Maximize => 1.0,
    };
    Ok(position
        .iter()
        .zip(direction.components())
        .map(|(x, b)| (x + orientation * delta * b * sign).clamp(0.0, 1.0))
        .collect())
}

/// Run-level parameters: iteration budget, schedule coefficients, penalty
/// weight, and the generator seed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    /// Iteration budget; each iteration costs three fitness evaluations
    /// (two probes plus the update point).
    pub max_iterations: usize,
    /// Step decay coefficient, in `[0, 1)`.
    pub c1: f64,
    /// Step-to-antenna ratio `delta / d`, positive.
    pub c2: f64,
    /// Initial step size in normalized-space units.
    pub delta_init: f64,
    /// Additive term of the step recurrence; the step converges to
    /// `delta_add / (1 - c1)`.
    pub delta_add: f64,
    /// Penalty weight for constraint violations.
    pub lambda: f64,
    /// Seed for the run's private generator.
    pub seed: u64,
}

// Calibrated on the bundled benchmarks: the step starts large enough to
// cross the cube, decays 5% per iteration, and floors at delta_add/(1-c1)
// = 6e-4 so late iterations still refine. c2 near 1 keeps the antennae
// probing roughly where a step would land.
impl Default for RunConfig {
    fn default() -> Self {
        Self {
            max_iterations: 100,
            c1: 0.95,
            c2: 1.02,
            delta_init: 0.72,
            delta_add: 3e-5,
            lambda: 1e10,
            seed: 0,
        }
    }
}

impl RunConfig {
    /// Switches to the textbook recurrence by re-adding the initial step each
    /// iteration (`delta_add = delta_init`); the step then grows toward
    /// `delta_init / (1 - c1)` instead of annealing.
    pub fn with_paper_exact_schedule(mut self) -> Self {
        self.delta_add = self.delta_init;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// Checks the field invariants; the schedule fields are validated by
    /// [`StepSchedule::new`].
    pub fn validate(&self) -> Result<()> {
        if self.max_iterations == 0 {
            return Err(Error::InvalidConfig(
                "max_iterations must be at least 1".into(),
            ));
        }
        if !self.lambda.is_finite() || self.lambda <= 0.0 {
            return Err(Error::InvalidConfig(format!(
                "lambda must be positive, got {}",
                self.lambda
            )));
        }
        StepSchedule::new(self.c1, self.c2, self.delta_init, self.delta_add).map(|_| ())
    }

    fn schedule(&self) -> Result<StepSchedule> {
        StepSchedule::new(self.c1, self.c2, self.delta_init, self.delta_add)
    }
}

/// Walker state: current position plus the best-so-far bookkeeping.
#[derive(Debug, Clone, PartialEq)]
pub struct BeetleState {
    /// Current position in the unit cube.
    pub position: Vec<f64>,
    /// Position of the best penalized fitness seen so far.
    pub best_position: Vec<f64>,
    /// Best penalized fitness seen so far (minimized internally).
    pub best_fitness: f64,
    /// Completed iterations.
    pub iteration: usize,
}

/// One trace line per iteration. Fitness columns record the internally
/// minimized penalized fitness (the negated objective plus penalty for
/// maximization problems), so `best` is non-increasing for every run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    /// 1-based iteration index.
    pub iteration: usize,
    /// Step size used by this iteration's position update.
    pub delta: f64,
    /// Antenna distance used by this iteration's probes.
    pub d: f64,
    /// Penalized fitness of the updated position.
    pub fitness: f64,
    /// Best penalized fitness after this iteration.
    pub best: f64,
}

/// Everything a single run produces.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    /// Seed the run was executed with.
    pub seed: u64,
    /// Echo of the configuration.
    pub config: RunConfig,
    /// Best position in the unit cube.
    pub best_normalized: Vec<f64>,
    /// Best position in problem units (grid variables snapped).
    pub best_physical: Vec<f64>,
    /// Best penalized fitness (the minimized quantity).
    pub best_penalized: f64,
    /// Raw objective at the best point, in the problem's own sense.
    pub best_objective: f64,
    /// Constraint values and feasibility at the best point.
    pub feasibility: FeasibilityReport,
    /// Per-iteration trace.
    pub trace: Vec<TraceRow>,
}

/// Runs the search on `problem` with `config`. Deterministic: the record is
/// a pure function of the problem, the configuration, and the seed.
pub fn run_bas(problem: &ConstrainedProblem, config: &RunConfig) -> Result<RunRecord> {
    config.validate()?;
    let space = problem.space();
    let dim = space.dimension();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut schedule = config.schedule()?;

    // Penalized fitness of a normalized point, negated for maximization so
    // the loop always minimizes.
    let evaluate = |u: &[f64]| -> Result<f64> {
        let x = space.denormalize(u)?;
        let f = problem.objective(&x);
        if !f.is_finite() {
            return Err(Error::NonFiniteObjective { point: x });
        }
        let g = problem.constraints().values(&x)?;
        let f_oriented = match problem.sense() {
            Sense::Minimize => f,
            Sense::Maximize => -f,
        };
        Ok(penalized_fitness(f_oriented, &g, config.lambda))
    };

    let mut state = BeetleState {
        position: space.random_unit_point(&mut rng),
        best_position: Vec::new(),
        best_fitness: f64::INFINITY,
        iteration: 0,
    };
    state.best_position = state.position.clone();

    let mut trace = Vec::with_capacity(config.max_iterations);
    for iteration in 1..=config.max_iterations {
        let direction = sample_unit_direction(dim, &mut rng)?;
        let (f_right, f_left) =
            probe_antennae(&state.position, &direction, schedule.d(), evaluate)?;
        state.position = detect_step(
            &state.position,
            &direction,
            schedule.delta(),
            f_right,
            f_left,
            Sense::Minimize,
        )?;
        let fitness = evaluate(&state.position)?;
        if fitness < state.best_fitness {
            state.best_fitness = fitness;
            state.best_position = state.position.clone();
        }
        state.iteration = iteration;
        trace.push(TraceRow {
            iteration,
            delta: schedule.delta(),
            d: schedule.d(),
            fitness,
            best: state.best_fitness,
        });
        schedule.advance();
    }

    let best_physical = space.denormalize(&state.best_position)?;
    let best_objective = problem.objective(&best_physical);
    let feasibility = problem.constraints().report(&best_physical)?;
    Ok(RunRecord {
        seed: config.seed,
        config: config.clone(),
        best_normalized: state.best_position,
        best_physical,
        best_penalized: state.best_fitness,
        best_objective,
        feasibility,
        trace,
    })
}
