//! Determinism guarantees: reruns, seed windows, and worker pools.
//!
//! A run is a pure function of (problem, config, seed); a batch derives run
//! seeds as `base_seed + r` and its summary does not depend on how many
//! worker threads execute it.
//!
//! ```bash
//! cargo run --example seeded_reproducibility
//! ```

use bas_wpt::{problems, run_bas, run_batch, BatchConfig, RunConfig};

fn main() -> Result<(), bas_wpt::Error> {
    // identical (problem, config, seed) => bit-identical records
    let problem = problems::himmelblau()?;
    let config = RunConfig {
        max_iterations: 150,
        seed: 11,
        ..RunConfig::default()
    };
    let first = run_bas(&problem, &config)?;
    let second = run_bas(&problem, &config)?;
    assert_eq!(first, second);
    println!(
        "rerun with seed 11: bit-identical ({} trace rows)",
        first.trace.len()
    );

    // batches order results by seed and are worker-count independent
    let mut batch = BatchConfig::new("himmelblau", 8, 100);
    batch.template.max_iterations = 80;
    let sequential = run_batch(&batch)?;
    batch.workers = 8;
    let pooled = run_batch(&batch)?;
    assert_eq!(sequential, pooled);
    println!("8 restarts, 1 worker vs 8 workers: identical summaries");

    let seeds: Vec<u64> = sequential.runs.iter().map(|r| r.seed).collect();
    println!("run seeds (base 100): {seeds:?}");
    println!(
        "best run: seed {} with f = {:.4}",
        sequential.best.seed, sequential.best.f_star
    );
    Ok(())
}
