//! Batch optimization of Himmelblau's five-variable constrained benchmark.
//!
//! Three double-sided response constraints are split into six one-sided
//! inequalities. A short batch lands the response surfaces inside their
//! bands; a longer refinement batch approaches the best known objective.
//!
//! ```bash
//! cargo run --release --example himmelblau
//! ```

use bas_wpt::{problems, run_batch, BatchConfig};

fn main() -> Result<(), bas_wpt::Error> {
    let mut config = BatchConfig::new("himmelblau", 30, 0);
    config.template.max_iterations = 200;
    config.workers = 4;

    let summary = run_batch(&config)?;
    println!("himmelblau: 30 restarts x 200 iterations");
    println!("best feasible f = {:.4}", summary.best.f_star);
    print_responses(&summary.best.x);

    config.template.max_iterations = 2000;
    let refined = run_batch(&config)?;
    println!("\nrefined: 30 restarts x 2000 iterations");
    println!("best feasible f = {:.4}", refined.best.f_star);
    print_responses(&refined.best.x);
    Ok(())
}

fn print_responses(x: &[f64]) {
    println!("  x = {x:?}");
    println!(
        "  responses: g1 = {:.4} in [0, 92], g2 = {:.4} in [90, 110], g3 = {:.4} in [20, 25]",
        problems::himmelblau_g1(x),
        problems::himmelblau_g2(x),
        problems::himmelblau_g3(x)
    );
}
