//! Benchmark problems behind a uniform constrained-problem interface.
//!
//! Ships the two engineering design benchmarks (pressure vessel, Himmelblau)
//! plus an unconstrained sphere for smoke testing. Problems are addressable
//! by name for the CLI registry.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::penalty::ConstraintSet;
use crate::search::Sense;
use crate::space::{SearchSpace, VariableSpec};

/// Objective function over a physical point.
pub type ObjectiveFn = Box<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A named objective with one-sided inequality constraints over a bounded,
/// possibly mixed continuous/grid domain.
pub struct ConstrainedProblem {
    name: String,
    space: SearchSpace,
    objective: ObjectiveFn,
    constraints: ConstraintSet,
    sense: Sense,
}

impl ConstrainedProblem {
    pub fn new(
        name: impl Into<String>,
        space: SearchSpace,
        objective: ObjectiveFn,
        constraints: ConstraintSet,
        sense: Sense,
    ) -> Self {
        Self {
            name: name.into(),
            space,
            objective,
            constraints,
            sense,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn constraints(&self) -> &ConstraintSet {
        &self.constraints
    }

    pub fn sense(&self) -> Sense {
        self.sense
    }

    /// Raw objective value at a physical point.
    pub fn objective(&self, x: &[f64]) -> f64 {
        (self.objective)(x)
    }
}

impl std::fmt::Debug for ConstrainedProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConstrainedProblem")
            .field("name", &self.name)
            .field("dimension", &self.space.dimension())
            .field("constraints", &self.constraints.len())
            .field("sense", &self.sense)
            .finish()
    }
}

/// Cylindrical pressure vessel design: minimize material cost over shell
/// thickness `x1`, head thickness `x2` (both on a 0.0625-inch grid), inner
/// radius `x3`, and cylinder length `x4`.
pub fn pressure_vessel() -> Result<ConstrainedProblem> {
    let thickness_grid = || VariableSpec::grid_steps(0.0625, 0.0625, 99);
    let space = SearchSpace::new(vec![
        thickness_grid()?,
        thickness_grid()?,
        VariableSpec::continuous(10.0, 200.0)?,
        VariableSpec::continuous(10.0, 200.0)?,
    ])?;

    let objective: ObjectiveFn = Box::new(|x: &[f64]| {
        0.6224 * x[0] * x[2] * x[3]
            + 1.7781 * x[1] * x[2] * x[2]
            + 3.1661 * x[0] * x[0] * x[3]
            + 19.84 * x[0] * x[0] * x[2]
    });

    let mut constraints = ConstraintSet::none();
    constraints.push(|x: &[f64]| -x[0] + 0.0193 * x[2]);
    constraints.push(|x: &[f64]| -x[1] + 0.00954 * x[2]);
    constraints.push(|x: &[f64]| {
        -PI * x[2] * x[2] * x[3] - 4.0 / 3.0 * PI * x[2] * x[2] * x[2] + 1_296_000.0
    });
    constraints.push(|x: &[f64]| x[3] - 240.0);

    Ok(ConstrainedProblem::new(
        "pressure-vessel",
        space,
        objective,
        constraints,
        Sense::Minimize,
    ))
}

/// Himmelblau's nonlinear benchmark: five continuous variables, three
/// double-sided response constraints split into six one-sided inequalities.
pub fn himmelblau() -> Result<ConstrainedProblem> {
    let space = SearchSpace::new(vec![
        VariableSpec::continuous(78.0, 102.0)?,
        VariableSpec::continuous(33.0, 45.0)?,
        VariableSpec::continuous(27.0, 45.0)?,
        VariableSpec::continuous(27.0, 45.0)?,
        VariableSpec::continuous(27.0, 45.0)?,
    ])?;

    let objective: ObjectiveFn = Box::new(|x: &[f64]| {
        5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.29329 * x[0] - 40792.141
    });

    let mut constraints = ConstraintSet::none();
    constraints.push_two_sided(0.0, 92.0, himmelblau_g1)?;
    constraints.push_two_sided(90.0, 110.0, himmelblau_g2)?;
    constraints.push_two_sided(20.0, 25.0, himmelblau_g3)?;

    Ok(ConstrainedProblem::new(
        "himmelblau",
        space,
        objective,
        constraints,
        Sense::Minimize,
    ))
}

/// First Himmelblau response function, bounded to `[0, 92]`.
pub fn himmelblau_g1(x: &[f64]) -> f64 {
    85.334407 + 0.0056858 * x[1] * x[4] + 0.00026 * x[0] * x[3] - 0.0022053 * x[2] * x[4]
}

/// Second Himmelblau response function, bounded to `[90, 110]`.
pub fn himmelblau_g2(x: &[f64]) -> f64 {
    80.51249 + 0.0071317 * x[1] * x[4] + 0.0029955 * x[0] * x[1] + 0.0021813 * x[2] * x[2]
}

/// Third Himmelblau response function, bounded to `[20, 25]`.
pub fn himmelblau_g3(x: &[f64]) -> f64 {
    9.300961 + 0.0047026 * x[2] * x[4] + 0.0012547 * x[0] * x[2] + 0.0019085 * x[2] * x[3]
}

/// Unconstrained sum of squares on `[-5, 5]^dim`; global minimum 0 at the
/// origin.
pub fn sphere(dim: usize) -> Result<ConstrainedProblem> {
    let space = SearchSpace::uniform_box(dim, -5.0, 5.0)?;
    let objective: ObjectiveFn = Box::new(|x: &[f64]| x.iter().map(|v| v * v).sum());
    Ok(ConstrainedProblem::new(
        "sphere",
        space,
        objective,
        ConstraintSet::none(),
        Sense::Minimize,
    ))
}

/// Names accepted by [`by_name`], in listing order.
pub const PROBLEM_NAMES: [&str; 3] = ["pressure-vessel", "himmelblau", "sphere"];

/// Looks a problem up by its registry name; `sphere` is four-dimensional.
pub fn by_name(name: &str) -> Result<ConstrainedProblem> {
    match name {
        "pressure-vessel" => pressure_vessel(),
        "himmelblau" => himmelblau(),
        "sphere" => sphere(4),
        _ => Err(Error::UnknownProblem {
            name: name.to_string(),
            known: PROBLEM_NAMES.join(", "),
        }),
    }
}
