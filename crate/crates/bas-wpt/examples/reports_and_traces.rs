//! Report serialization: JSON, CSV, and per-iteration trace files.
//!
//! Floats are written with 17 significant digits, so re-parsing a report
//! recovers bit-identical values.
//!
//! ```bash
//! cargo run --example reports_and_traces
//! ```

use bas_wpt::{emit_report, run_batch, trace_csv, BatchConfig, BatchSummary, ReportFormat};

fn main() -> Result<(), bas_wpt::Error> {
    let mut config = BatchConfig::new("sphere", 3, 0);
    config.template.max_iterations = 60;
    // a trace path in the config makes the batch write the best run's trace
    config.trace_path = Some(std::env::temp_dir().join("bas_wpt_example_trace.csv"));

    let summary = run_batch(&config)?;

    let json = emit_report(&summary, ReportFormat::Json)?;
    println!("--- JSON report (first lines) ---");
    for line in json.lines().take(12) {
        println!("{line}");
    }

    let parsed: BatchSummary = serde_json::from_str(&json).expect("report parses");
    assert_eq!(parsed, summary);
    assert_eq!(
        parsed.runs[0].best_f.to_bits(),
        summary.runs[0].best_f.to_bits(),
        "floats round-trip exactly"
    );
    println!("... JSON re-parses to an equal summary (bit-exact floats)\n");

    println!("--- CSV report ---");
    print!("{}", emit_report(&summary, ReportFormat::Csv)?);

    let trace_path = config.trace_path.as_ref().unwrap();
    let trace_text = std::fs::read_to_string(trace_path)?;
    println!(
        "\n--- trace file {} (first lines) ---",
        trace_path.display()
    );
    for line in trace_text.lines().take(4) {
        println!("{line}");
    }
    assert_eq!(trace_text, trace_csv(&summary.best_trace));
    Ok(())
}
