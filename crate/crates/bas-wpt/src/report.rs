//! Report and trace serialization.
//!
//! Floating-point values are rendered with 17 significant digits
//! (`{:.16e}`), which round-trips every finite `f64` exactly: a report can
//! be re-parsed into the values that produced it.

use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};

use crate::batch::BatchSummary;
use crate::error::{Error, Result};
use crate::search::TraceRow;

/// Output encodings for batch reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(Error::InvalidConfig(format!(
                "unknown format '{other}', expected json or csv"
            ))),
        }
    }
}

impl std::fmt::Display for ReportFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Json => "json",
            Self::Csv => "csv",
        })
    }
}

/// 17-significant-digit rendering; parses back to the identical bits.
pub fn format_f64(value: f64) -> String {
    format!("{value:.16e}")
}

/// Serializes a batch summary in the requested format.
pub fn emit_report(summary: &BatchSummary, format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Json => to_json_string(summary),
        ReportFormat::Csv => Ok(to_csv_string(summary)),
    }
}

/// Pretty JSON with exact-round-trip floats.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut serializer = Serializer::with_formatter(&mut out, RoundTripFormatter::new());
    value
        .serialize(&mut serializer)
        .map_err(|e| Error::Io(io::Error::other(e)))?;
    Ok(String::from_utf8(out).expect("serde_json emits utf-8"))
}

fn to_csv_string(summary: &BatchSummary) -> String {
    let mut out = String::from("run,seed,feasible,best_f\n");
    for run in &summary.runs {
        out.push_str(&format!(
            "{},{},{},{}\n",
            run.run,
            run.seed,
            run.feasible,
            format_f64(run.best_f)
        ));
    }
    out.push_str(&format!("# problem: {}\n", summary.problem));
    out.push_str(&format!("# restarts: {}\n", summary.restarts));
    out.push_str(&format!("# base_seed: {}\n", summary.base_seed));
    out.push_str(&format!(
        "# iterations: {}\n",
        summary.config.max_iterations
    ));
    out.push_str(&format!("# infeasible_runs: {}\n", summary.infeasible_runs));
    match &summary.stats {
        Some(stats) => {
            out.push_str(&format!("# feasible_runs: {}\n", stats.feasible_runs));
            out.push_str(&format!("# best_f: {}\n", format_f64(stats.best_f)));
            out.push_str(&format!("# worst_f: {}\n", format_f64(stats.worst_f)));
            out.push_str(&format!("# mean_f: {}\n", format_f64(stats.mean_f)));
            out.push_str(&format!("# median_f: {}\n", format_f64(stats.median_f)));
            out.push_str(&format!("# std_f: {}\n", format_f64(stats.std_f)));
        }
        None => out.push_str("# feasible_runs: 0\n"),
    }
    let best = &summary.best;
    out.push_str(&format!("# best_run: {}\n", best.run));
    out.push_str(&format!("# best_seed: {}\n", best.seed));
    out.push_str(&format!("# best_x: {}\n", join_floats(&best.x)));
    out.push_str(&format!("# best_g: {}\n", join_floats(&best.g)));
    out.push_str(&format!("# best_f_star: {}\n", format_f64(best.f_star)));
    out.push_str(&format!("# best_feasible: {}\n", best.feasible));
    out
}

fn join_floats(values: &[f64]) -> String {
    values
        .iter()
        .map(|&v| format_f64(v))
        .collect::<Vec<_>>()
        .join(",")
}

/// Renders a per-iteration trace as CSV.
pub fn trace_csv(rows: &[TraceRow]) -> String {
    let mut out = String::from("iter,delta,d,F_current,F_best\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.iteration,
            format_f64(row.delta),
            format_f64(row.d),
            format_f64(row.fitness),
            format_f64(row.best)
        ));
    }
    out
}

/// Writes a trace CSV to `path`, creating parent directories as needed.
pub fn write_trace(path: &Path, rows: &[TraceRow]) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    std::fs::write(path, trace_csv(rows))?;
    Ok(())
}

/// Pretty-printing JSON formatter that emits floats via [`format_f64`].
struct RoundTripFormatter<'a> {
    pretty: PrettyFormatter<'a>,
}

impl RoundTripFormatter<'_> {
    fn new() -> Self {
        Self {
            pretty: PrettyFormatter::new(),
        }
    }
}

impl Formatter for RoundTripFormatter<'_> {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        debug_assert!(value.is_finite(), "reports only contain finite values");
        write!(writer, "{value:.16e}")
    }

    fn begin_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.pretty.begin_array(writer)
    }

    fn end_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.pretty.end_array(writer)
    }

    fn begin_array_value<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.pretty.begin_array_value(writer, first)
    }

    fn end_array_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.pretty.end_array_value(writer)
    }

    fn begin_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.pretty.begin_object(writer)
    }

    fn end_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.pretty.end_object(writer)
    }

    fn begin_object_key<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.pretty.begin_object_key(writer, first)
    }

    fn begin_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.pretty.begin_object_value(writer)
    }

    fn end_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + Write,
    {
        self.pretty.end_object_value(writer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::batch::{run_batch, BatchConfig};
    use crate::search::RunConfig;

    fn small_summary(restarts: usize) -> BatchSummary {
        let config = BatchConfig {
            template: RunConfig {
                max_iterations: 40,
                ..RunConfig::default()
            },
            ..BatchConfig::new("sphere", restarts, 0)
        };
        run_batch(&config).unwrap()
    }

    #[test]
    fn format_round_trips_awkward_values() {
        for v in [
            0.0,
            -0.0,
            1.0,
            -1.0 / 3.0,
            6059.7258,
            1e10,
            f64::MIN_POSITIVE,
            f64::MAX,
            -2.2250738585072014e-308,
        ] {
            let text = format_f64(v);
            let back: f64 = text.parse().unwrap();
            assert_eq!(v.to_bits(), back.to_bits(), "{v} -> {text} -> {back}");
        }
    }

    #[test]
    fn csv_has_one_data_row_per_run() {
        let summary = small_summary(1);
        let csv = emit_report(&summary, ReportFormat::Csv).unwrap();
        let data_rows: Vec<&str> = csv
            .lines()
            .skip(1)
            .filter(|l| !l.starts_with('#'))
            .collect();
        assert_eq!(data_rows.len(), 1);
        assert!(csv.starts_with("run,seed,feasible,best_f\n"));
    }

    #[test]
    fn json_report_round_trips_to_an_equal_summary() {
        let summary = small_summary(3);
        let json = emit_report(&summary, ReportFormat::Json).unwrap();
        let back: BatchSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(summary, back);
        // the floats must be bit-identical, not merely close
        for (a, b) in summary.runs.iter().zip(&back.runs) {
            assert_eq!(a.best_f.to_bits(), b.best_f.to_bits());
        }
    }

    #[test]
    fn csv_and_json_agree_on_per_run_objectives() {
        let summary = small_summary(4);
        let json = emit_report(&summary, ReportFormat::Json).unwrap();
        let csv = emit_report(&summary, ReportFormat::Csv).unwrap();
        let parsed: BatchSummary = serde_json::from_str(&json).unwrap();
        let csv_best_f: Vec<f64> = csv
            .lines()
            .skip(1)
            .filter(|l| !l.starts_with('#'))
            .map(|l| l.rsplit(',').next().unwrap().parse().unwrap())
            .collect();
        for (run, &from_csv) in parsed.runs.iter().zip(&csv_best_f) {
            assert_eq!(run.best_f.to_bits(), from_csv.to_bits());
        }
    }

    #[test]
    fn json_best_block_is_laid_out_like_a_table_row() {
        let summary = small_summary(2);
        let json = emit_report(&summary, ReportFormat::Json).unwrap();
        let best_at = json.find("\"best\"").unwrap();
        let x_at = json[best_at..].find("\"x\"").unwrap();
        let g_at = json[best_at..].find("\"g\"").unwrap();
        let f_at = json[best_at..].find("\"f_star\"").unwrap();
        assert!(x_at < g_at && g_at < f_at);
    }

    #[test]
    fn trace_csv_uses_the_documented_header() {
        let summary = small_summary(1);
        let csv = trace_csv(&summary.best_trace);
        assert!(csv.starts_with("iter,delta,d,F_current,F_best\n"));
        assert_eq!(csv.lines().count(), summary.best_trace.len() + 1);
    }

    #[test]
    fn write_trace_creates_parent_directories() {
        let dir = std::env::temp_dir().join("bas_wpt_trace_test");
        let _ = std::fs::remove_dir_all(&dir);
        let path = dir.join("nested").join("trace.csv");
        let summary = small_summary(1);
        write_trace(&path, &summary.best_trace).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("iter,delta,d,F_current,F_best\n"));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
