//! Minimal single-run walkthrough on the unconstrained sphere.
//!
//! ```bash
//! cargo run --example sphere_quickstart
//! ```

use bas_wpt::{problems, run_bas, RunConfig};

fn main() -> Result<(), bas_wpt::Error> {
    let problem = problems::sphere(4)?;
    let config = RunConfig {
        max_iterations: 200,
        seed: 7,
        ..RunConfig::default()
    };

    let record = run_bas(&problem, &config)?;

    println!(
        "sphere(4), {} iterations, seed {}",
        config.max_iterations, config.seed
    );
    println!("best objective: {:.6e}", record.best_objective);
    println!("best point:     {:?}", record.best_physical);
    println!("feasible:       {}", record.feasibility.feasible);

    // the trace records the annealing step and the best-so-far curve
    for row in record.trace.iter().step_by(40) {
        println!(
            "iter {:>3}  delta {:.4}  current {:>12.6}  best {:>12.6}",
            row.iteration, row.delta, row.fitness, row.best
        );
    }
    Ok(())
}
