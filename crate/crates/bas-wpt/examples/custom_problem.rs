//! Defining and solving your own constrained problem.
//!
//! Minimizes the material of an open-top cylindrical tank that must hold at
//! least 500 volume units, with the wall thickness restricted to a supplier's
//! discrete catalog. Shows mixed grid/continuous variables, one-sided and
//! double-sided constraints, and running a batch on an unregistered problem.
//!
//! ```bash
//! cargo run --example custom_problem
//! ```

use std::f64::consts::PI;

use bas_wpt::{
    run_batch_on, BatchConfig, ConstrainedProblem, ConstraintSet, SearchSpace, Sense, VariableSpec,
};

fn main() -> Result<(), bas_wpt::Error> {
    // x0: radius, x1: height (continuous); x2: wall thickness from a catalog
    let space = SearchSpace::new(vec![
        VariableSpec::continuous(0.5, 10.0)?,
        VariableSpec::continuous(0.5, 20.0)?,
        VariableSpec::grid(vec![0.05, 0.08, 0.1, 0.15, 0.2, 0.3])?,
    ])?;

    // sheet area (side + bottom) times thickness
    let objective = Box::new(|x: &[f64]| {
        let (r, h, t) = (x[0], x[1], x[2]);
        (2.0 * PI * r * h + PI * r * r) * t
    });

    let mut constraints = ConstraintSet::none();
    // hold at least 500 volume units: 500 - pi r^2 h <= 0
    constraints.push(|x: &[f64]| 500.0 - PI * x[0] * x[0] * x[1]);
    // aspect ratio h/r kept within manufacturable bounds [1, 4]
    constraints.push_two_sided(1.0, 4.0, |x: &[f64]| x[1] / x[0])?;

    let problem =
        ConstrainedProblem::new("open-tank", space, objective, constraints, Sense::Minimize);

    let mut config = BatchConfig::new("open-tank", 20, 42);
    config.template.max_iterations = 400;
    let summary = run_batch_on(&problem, &config)?;

    let best = &summary.best;
    println!("open-top tank, 20 restarts x 400 iterations");
    println!(
        "radius {:.4}, height {:.4}, thickness {} (catalog value)",
        best.x[0], best.x[1], best.x[2]
    );
    println!(
        "volume {:.2} (>= 500), aspect h/r {:.3} (in [1, 4])",
        PI * best.x[0] * best.x[0] * best.x[1],
        best.x[1] / best.x[0]
    );
    println!("material used: {:.4}", best.f_star);
    println!("feasible: {}", best.feasible);
    Ok(())
}
