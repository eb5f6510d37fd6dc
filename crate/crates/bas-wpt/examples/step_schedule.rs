//! The two step-size regimes side by side.
//!
//! The default schedule anneals: `delta' = c1 * delta + delta_add` decays
//! geometrically onto the floor `delta_add / (1 - c1)`. The textbook
//! recurrence re-adds the full initial step each iteration instead
//! (`delta_add = delta_init`), so the step *grows* toward
//! `delta_init / (1 - c1)`; it remains available behind
//! `with_paper_exact_schedule` and the CLI's `--paper-exact-schedule`.
//!
//! ```bash
//! cargo run --example step_schedule
//! ```

use bas_wpt::{problems, run_bas, RunConfig, StepSchedule};

fn main() -> Result<(), bas_wpt::Error> {
    let annealing = RunConfig::default();
    let textbook = RunConfig::default().with_paper_exact_schedule();

    println!("iter   annealing delta / d         textbook delta / d");
    let mut a = StepSchedule::new(
        annealing.c1,
        annealing.c2,
        annealing.delta_init,
        annealing.delta_add,
    )?;
    let mut t = StepSchedule::new(
        textbook.c1,
        textbook.c2,
        textbook.delta_init,
        textbook.delta_add,
    )?;
    for iter in 0..=120 {
        if iter % 20 == 0 {
            println!(
                "{iter:>4}   {:>9.5} / {:<9.5}    {:>9.5} / {:<9.5}",
                a.delta(),
                a.d(),
                t.delta(),
                t.d()
            );
        }
        a.advance();
        t.advance();
    }
    println!(
        "limits: annealing -> {:.5}, textbook -> {:.5}\n",
        a.fixed_point(),
        t.fixed_point()
    );

    // what the regimes mean in practice on a benchmark run
    let problem = problems::sphere(4)?;
    for (label, config) in [("annealing", annealing), ("textbook ", textbook)] {
        let record = run_bas(
            &problem,
            &RunConfig {
                max_iterations: 120,
                seed: 3,
                ..config
            },
        )?;
        println!(
            "{label} schedule: sphere best = {:.4e}",
            record.best_objective
        );
    }
    Ok(())
}
