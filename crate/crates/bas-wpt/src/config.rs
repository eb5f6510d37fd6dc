//! Flat key-value config files mirroring the CLI flags.
//!
//! A file holds one `key = value` pair per line, with blank lines and `#`
//! comments ignored. Keys use the CLI flag spelling (`delta-init`,
//! `paper-exact-schedule`, ...). Values given on the command line override
//! file values.

use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::report::ReportFormat;

/// Optional batch settings read from a file; `None` means "not given".
#[derive(Debug, Clone, Default, PartialEq)]
pub struct FileConfig {
    pub problem: Option<String>,
    pub iters: Option<usize>,
    pub restarts: Option<usize>,
    pub seed: Option<u64>,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    pub delta_init: Option<f64>,
    pub delta_add: Option<f64>,
    pub paper_exact_schedule: Option<bool>,
    pub lambda: Option<f64>,
    pub format: Option<ReportFormat>,
    pub trace: Option<PathBuf>,
    pub workers: Option<usize>,
}

impl FileConfig {
    /// Reads and parses `path`.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::ConfigFile {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Parses config text; `label` names the source in error messages.
    pub fn parse(text: &str, label: &str) -> Result<Self> {
        let mut config = Self::default();
        for (line_no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::ConfigFile {
                path: label.to_string(),
                message: format!("line {}: expected 'key = value', got '{raw}'", line_no + 1),
            })?;
            let key = key.trim();
            let value = value.trim();
            let fail = |message: String| Error::ConfigFile {
                path: label.to_string(),
                message: format!("line {}: {message}", line_no + 1),
            };
            match key {
                "problem" => config.problem = Some(value.to_string()),
                "iters" => config.iters = Some(parse_value(key, value).map_err(fail)?),
                "restarts" => config.restarts = Some(parse_value(key, value).map_err(fail)?),
                "seed" => config.seed = Some(parse_value(key, value).map_err(fail)?),
                "c1" => config.c1 = Some(parse_value(key, value).map_err(fail)?),
                "c2" => config.c2 = Some(parse_value(key, value).map_err(fail)?),
                "delta-init" => config.delta_init = Some(parse_value(key, value).map_err(fail)?),
                "delta-add" => config.delta_add = Some(parse_value(key, value).map_err(fail)?),
                "paper-exact-schedule" => {
                    config.paper_exact_schedule = Some(parse_value(key, value).map_err(fail)?)
                }
                "lambda" => config.lambda = Some(parse_value(key, value).map_err(fail)?),
                "format" => {
                    config.format = Some(value.parse().map_err(|e: Error| fail(e.to_string()))?)
                }
                "trace" => config.trace = Some(PathBuf::from(value)),
                "workers" => config.workers = Some(parse_value(key, value).map_err(fail)?),
                other => {
                    return Err(fail(format!("unknown key '{other}'")));
                }
            }
        }
        Ok(config)
    }
}

fn parse_value<T: std::str::FromStr>(key: &str, value: &str) -> std::result::Result<T, String>
where
    T::Err: std::fmt::Display,
{
    value
        .parse()
        .map_err(|e| format!("invalid value '{value}' for '{key}': {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_full_file() {
        let text = "\
# batch settings
problem = pressure-vessel
iters = 150
restarts = 30
seed = 0

c1 = 0.95
c2 = 5.0
delta-init = 1.0
delta-add = 0.001
paper-exact-schedule = false
lambda = 1e10
format = csv
trace = out/trace.csv
workers = 4
";
        let config = FileConfig::parse(text, "test").unwrap();
        assert_eq!(config.problem.as_deref(), Some("pressure-vessel"));
        assert_eq!(config.iters, Some(150));
        assert_eq!(config.restarts, Some(30));
        assert_eq!(config.seed, Some(0));
        assert_eq!(config.c1, Some(0.95));
        assert_eq!(config.c2, Some(5.0));
        assert_eq!(config.delta_init, Some(1.0));
        assert_eq!(config.delta_add, Some(0.001));
        assert_eq!(config.paper_exact_schedule, Some(false));
        assert_eq!(config.lambda, Some(1e10));
        assert_eq!(config.format, Some(ReportFormat::Csv));
        assert_eq!(config.trace, Some(PathBuf::from("out/trace.csv")));
        assert_eq!(config.workers, Some(4));
    }

    #[test]
    fn unknown_keys_are_rejected_with_line_numbers() {
        let err = FileConfig::parse("problem = sphere\nbogus = 1\n", "test").unwrap_err();
        match err {
            Error::ConfigFile { message, .. } => {
                assert!(message.contains("line 2"));
                assert!(message.contains("bogus"));
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn malformed_lines_and_values_are_rejected() {
        assert!(FileConfig::parse("problem sphere", "t").is_err());
        assert!(FileConfig::parse("iters = many", "t").is_err());
        assert!(FileConfig::parse("format = xml", "t").is_err());
    }

    #[test]
    fn empty_text_gives_all_defaults() {
        let config = FileConfig::parse("\n# only a comment\n", "t").unwrap();
        assert_eq!(config, FileConfig::default());
    }
}
