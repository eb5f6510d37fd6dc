//! Batch optimization of the pressure-vessel design problem.
//!
//! Four variables (two on a 1/16-inch thickness grid, radius and length
//! continuous), four inequality constraints, minimized material cost. The
//! best design over 30 seeded restarts lands near the known-best published
//! solution.
//!
//! ```bash
//! cargo run --release --example pressure_vessel
//! ```

use bas_wpt::{run_batch, BatchConfig};

fn main() -> Result<(), bas_wpt::Error> {
    let mut config = BatchConfig::new("pressure-vessel", 30, 0);
    config.template.max_iterations = 150;
    config.workers = 4;

    let summary = run_batch(&config)?;
    let stats = summary.stats.as_ref().expect("feasible runs");

    println!("pressure vessel: 30 restarts x 150 iterations (seeds 0..29)");
    println!(
        "feasible runs: {} / {}",
        stats.feasible_runs, summary.restarts
    );
    println!(
        "best {:.4}   median {:.4}   worst {:.4}",
        stats.best_f, stats.median_f, stats.worst_f
    );

    let best = &summary.best;
    println!("\nbest design (run {}, seed {}):", best.run, best.seed);
    println!("  shell thickness x1 = {:.4} in (grid)", best.x[0]);
    println!("  head thickness  x2 = {:.4} in (grid)", best.x[1]);
    println!("  inner radius    x3 = {:.4} in", best.x[2]);
    println!("  cylinder length x4 = {:.4} in", best.x[3]);
    for (i, g) in best.g.iter().enumerate() {
        println!("  g{} = {:>12.4}  (<= 0)", i + 1, g);
    }
    println!("  cost f* = {:.4}", best.f_star);
    Ok(())
}
