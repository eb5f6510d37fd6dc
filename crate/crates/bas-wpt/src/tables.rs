//! Re-evaluation of the bundled benchmark reference tables.
//!
//! Each table row is a published solution for one of the benchmark problems:
//! design variables, constraint values, and the objective, stored verbatim
//! as printed. Verification re-evaluates every row through the shipped
//! benchmark definitions and checks each cell against its printed value, so
//! a transcription slip in an objective or constraint formula cannot survive.
//!
//! Tolerances absorb the prints' rounding: a cell passes when the
//! re-evaluated value is within `max(rel_tol * |printed|, half of the
//! print's last decimal digit)`. A handful of cells are known misprints —
//! the printed number cannot be recovered from the row's own design
//! variables; those are pinned to their re-evaluated values instead and
//! reported distinctly, so they still guard the formulas without failing
//! the check. Rows whose printed design is marked as constraint-violating,
//! or is internally inconsistent, are skipped with a note.

use crate::problems::{
    himmelblau, himmelblau_g1, himmelblau_g2, himmelblau_g3, pressure_vessel, ConstrainedProblem,
};

/// Relative tolerance for the pressure-vessel table.
const PRESSURE_VESSEL_REL_TOL: f64 = 0.005;
/// Relative tolerance for the Himmelblau table.
const HIMMELBLAU_REL_TOL: f64 = 0.001;
/// Relative tolerance for cells pinned to re-evaluated values.
const PINNED_REL_TOL: f64 = 1e-9;

struct ReferenceRow {
    label: &'static str,
    x: &'static [&'static str],
    g: &'static [&'static str],
    f: &'static str,
    /// Present when the whole row is excluded from checking.
    skip: Option<&'static str>,
}

/// A printed cell that direct evaluation contradicts; `evaluates` is the
/// frozen re-evaluated value the cell is checked against instead.
struct KnownMisprint {
    row: &'static str,
    cell: &'static str,
    evaluates: f64,
}

const PRESSURE_VESSEL_ROWS: &[ReferenceRow] = &[
    ReferenceRow {
        label: "ref-01",
        x: &["0.8125", "0.4375", "42.0984", "176.6378"],
        g: &["-8.8000e-7", "-0.0359", "-3.5586", "-63.3622"],
        f: "6059.7258",
        skip: None,
    },
    ReferenceRow {
        label: "ref-02",
        x: &["1", "0.625", "51.2519", "90.9913"],
        g: &["-1.011", "-0.136", "-18759.75", "-149.009"],
        f: "7172.300",
        skip: None,
    },
    ReferenceRow {
        label: "ref-03",
        x: &["0.8125", "0.4375", "42.0870", "176.7791"],
        g: &["-2.210e-4", "-0.03599", "-3.51084", "-63.2208"],
        f: "6061.1229",
        skip: None,
    },
    ReferenceRow {
        label: "ref-04",
        x: &["1.000", "0.625", "51.000", "91.000"],
        g: &["-0.0157", "-0.1385", "-3233.916", "-149"],
        f: "7079.037",
        skip: None,
    },
    ReferenceRow {
        label: "ref-05",
        x: &["0.8125", "0.4375", "41.9768", "182.2845"],
        g: &["-0.0023", "-0.0370", "-22888.07", "-57.7155"],
        f: "6171.000",
        skip: None,
    },
    ReferenceRow {
        label: "ref-06",
        x: &["1.125", "0.625", "58.291", "43.690"],
        g: &["0.000016", "-0.0689", "-21.2201", "-196.3100"],
        f: "7198.0428",
        skip: None,
    },
    ReferenceRow {
        label: "ref-07",
        x: &["0.9375", "0.5000", "48.3290", "112.6790"],
        g: &["-0.0048", "-0.0389", "-3652.877", "-127.3210"],
        f: "6410.3811",
        skip: None,
    },
    ReferenceRow {
        label: "ref-08",
        x: &["0.8125", "0.4375", "40.3239", "200.0000"],
        g: &["-0.034324", "-0.05285", "-27.10585", "-40.0000"],
        f: "6288.7445",
        skip: None,
    },
    ReferenceRow {
        label: "ref-09",
        x: &["1.125", "0.625", "58.1978", "44.2930"],
        g: &["-0.00178", "-0.06979", "-974.3", "-195.707"],
        f: "7207.494",
        skip: None,
    },
    ReferenceRow {
        label: "ref-10",
        x: &["1.125", "0.625", "48.97", "106.72"],
        g: &["-0.1799", "-0.1578", "97.760", "-132.28"],
        f: "7980.894",
        skip: None,
    },
    ReferenceRow {
        label: "ref-11",
        x: &["1.125", "0.625", "58.2789", "43.7549"],
        g: &["-0.0002", "-0.06902", "-3.71629", "-196.245"],
        f: "7198.433",
        skip: None,
    },
    ReferenceRow {
        label: "ref-12",
        x: &["0.7782", "0.3846", "40.3196", "200.000"],
        g: &["-3.172e-5", "4.8984e-5", "1.3312", "-40"],
        f: "5885.33",
        skip: Some("published design is marked constraint-violating"),
    },
    ReferenceRow {
        label: "bas-wpt",
        x: &["0.8125", "0.4375", "42.09355", "42.09355"],
        g: &["-9.43E-05", "-0.03592", "-413.6252", "-63.2285"],
        f: "6062.04676",
        skip: Some(
            "printed x4 duplicates x3; the printed g3, g4, and objective \
             cannot be reproduced from the printed design",
        ),
    },
];

// Cells whose printed value cannot be recovered by evaluating the row's own
// printed design; pinned to the re-evaluated value.
const PRESSURE_VESSEL_MISPRINTS: &[KnownMisprint] = &[
    KnownMisprint {
        row: "ref-02",
        cell: "g1",
        evaluates: -1.083833000000001e-2,
    },
    KnownMisprint {
        row: "ref-02",
        cell: "f",
        evaluates: 7126.62151140419,
    },
    KnownMisprint {
        row: "ref-03",
        cell: "g3",
        evaluates: -3.46856842096895,
    },
    KnownMisprint {
        row: "ref-08",
        cell: "g3",
        evaluates: -304.4020515882876,
    },
    KnownMisprint {
        row: "ref-10",
        cell: "g4",
        evaluates: -133.28,
    },
    KnownMisprint {
        row: "ref-11",
        cell: "g3",
        evaluates: -3.573387072654441,
    },
];

const HIMMELBLAU_ROWS: &[ReferenceRow] = &[
    ReferenceRow {
        label: "ref-01",
        x: &["78.00", "33.00", "29.995256", "45.00", "36.775813"],
        g: &["92", "98.8405", "20"],
        f: "-30665.54",
        skip: None,
    },
    ReferenceRow {
        label: "ref-02",
        x: &["78.6200", "33.4400", "31.0700", "44.1800", "35.2200"],
        g: &["90.5208", "98.8929", "20.1316"],
        f: "-30373.949",
        skip: None,
    },
    ReferenceRow {
        label: "ref-03",
        x: &["81.4900", "34.0900", "31.2400", "42.2000", "34.3700"],
        g: &["90.5225", "99.3188", "20.0604"],
        f: "-30183.576",
        skip: None,
    },
    ReferenceRow {
        label: "ref-04",
        x: &["78.00", "33.00", "29.995", "45.00", "36.776"],
        g: &["90.7147", "98.8405", "19.9999"],
        f: "-30665.6088",
        skip: Some("published design is marked constraint-violating"),
    },
    ReferenceRow {
        label: "bas-wpt",
        x: &["78.00", "33.00", "27.1131", "45.00", "45.00"],
        g: &["91.9997", "100.4170", "20.02056"],
        f: "-31011.3244",
        skip: Some(
            "own-result row excluded from reference checking; the design \
             itself is verified feasible by the benchmark tests",
        ),
    },
];

// The first row's g1 cell was printed under the alternate response
// convention (0.0006262 * x1 * x4) found elsewhere in the literature; the
// shipped definition (0.00026 * x1 * x4) evaluates to 90.714638 there. The
// sibling rows print values consistent with the shipped definition.
const HIMMELBLAU_MISPRINTS: &[KnownMisprint] = &[KnownMisprint {
    row: "ref-01",
    cell: "g1",
    evaluates: 90.71463801352793,
}];

/// Verdict for one table cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellOutcome {
    /// Re-evaluation matches the printed value within tolerance.
    Pass,
    /// Documented misprint: the printed value is irreproducible, and the
    /// re-evaluated value matches its pinned expectation.
    KnownMisprint,
    /// Re-evaluation matches neither the printed value nor a pinned one.
    Fail,
}

/// One checked cell: what the table prints, what direct evaluation gives,
/// and the tolerance that was applied.
#[derive(Debug, Clone)]
pub struct CellCheck {
    pub row: String,
    pub cell: String,
    pub printed: f64,
    pub computed: f64,
    pub tolerance: f64,
    pub outcome: CellOutcome,
}

/// Check results for one table.
#[derive(Debug)]
pub struct TableCheck {
    pub table: String,
    pub cells: Vec<CellCheck>,
    /// Rows excluded from checking, with the reason.
    pub skipped: Vec<(String, String)>,
}

impl TableCheck {
    pub fn failures(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| c.outcome == CellOutcome::Fail)
            .count()
    }

    pub fn misprints(&self) -> usize {
        self.cells
            .iter()
            .filter(|c| c.outcome == CellOutcome::KnownMisprint)
            .count()
    }
}

/// Aggregate verification report over all bundled tables.
#[derive(Debug)]
pub struct TableReport {
    pub tables: Vec<TableCheck>,
}

impl TableReport {
    /// True when no cell failed; documented misprints do not fail the check.
    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn failures(&self) -> usize {
        self.tables.iter().map(TableCheck::failures).sum()
    }

    pub fn misprints(&self) -> usize {
        self.tables.iter().map(TableCheck::misprints).sum()
    }

    /// Human-readable per-cell report.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for table in &self.tables {
            out.push_str(&format!("{} reference table\n", table.table));
            let mut current_row = String::new();
            for cell in &table.cells {
                if cell.row != current_row {
                    if !current_row.is_empty() {
                        out.push('\n');
                    }
                    out.push_str(&format!("  row {:<8}", cell.row));
                    current_row = cell.row.clone();
                }
                let mark = match cell.outcome {
                    CellOutcome::Pass => "ok".to_string(),
                    CellOutcome::KnownMisprint => "misprint".to_string(),
                    CellOutcome::Fail => "FAIL".to_string(),
                };
                out.push_str(&format!(" {}:{}", cell.cell, mark));
            }
            if !current_row.is_empty() {
                out.push('\n');
            }
            for cell in &table.cells {
                match cell.outcome {
                    CellOutcome::KnownMisprint => out.push_str(&format!(
                        "  note {} {}: prints {} but the printed design evaluates to {:.9}\n",
                        cell.row, cell.cell, cell.printed, cell.computed
                    )),
                    CellOutcome::Fail => out.push_str(&format!(
                        "  FAIL {} {}: prints {} but evaluates to {:.9} (tolerance {:.3e})\n",
                        cell.row, cell.cell, cell.printed, cell.computed, cell.tolerance
                    )),
                    CellOutcome::Pass => {}
                }
            }
            for (row, reason) in &table.skipped {
                out.push_str(&format!("  skipped {row}: {reason}\n"));
            }
            let checked_rows = table
                .cells
                .iter()
                .map(|c| c.row.as_str())
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            out.push_str(&format!(
                "  {} rows checked, {} cells ok, {} documented misprints, {} failures\n",
                checked_rows,
                table
                    .cells
                    .iter()
                    .filter(|c| c.outcome == CellOutcome::Pass)
                    .count(),
                table.misprints(),
                table.failures()
            ));
        }
        out
    }
}

/// Half of the last printed decimal digit, derived from the printed text;
/// e.g. `"-0.0359"` gives `5e-5` and `"-8.8000e-7"` gives `5e-12`.
fn half_printed_step(text: &str) -> f64 {
    let lower = text.to_ascii_lowercase();
    let (mantissa, exponent) = match lower.split_once('e') {
        Some((m, e)) => (m, e.parse::<i32>().expect("printed exponent")),
        None => (lower.as_str(), 0),
    };
    let decimals = mantissa
        .split_once('.')
        .map_or(0, |(_, frac)| frac.len() as i32);
    0.5 * 10f64.powi(exponent - decimals)
}

fn cell_tolerance(printed_text: &str, rel_tol: f64) -> f64 {
    let printed: f64 = printed_text.parse().expect("printed cell value");
    f64::max(rel_tol * printed.abs(), half_printed_step(printed_text))
}

/// A table's raw response function, evaluated at a printed design.
type ResponseFn<'a> = &'a dyn Fn(&[f64]) -> f64;

fn check_table(
    table_name: &str,
    problem: &ConstrainedProblem,
    responses: &[ResponseFn],
    rows: &[ReferenceRow],
    misprints: &[KnownMisprint],
    rel_tol: f64,
) -> TableCheck {
    let mut cells = Vec::new();
    let mut skipped = Vec::new();
    for row in rows {
        if let Some(reason) = row.skip {
            skipped.push((row.label.to_string(), reason.to_string()));
            continue;
        }
        let x: Vec<f64> = row
            .x
            .iter()
            .map(|s| s.parse().expect("printed design variable"))
            .collect();

        // x cells: the printed design must be admissible (bounds and grids)
        for (i, (&text, value)) in row.x.iter().zip(&x).enumerate() {
            let variable = &problem.space().variables()[i];
            let admissible = *value >= variable.lower()
                && *value <= variable.upper()
                && variable.snap(*value) == *value;
            cells.push(CellCheck {
                row: row.label.to_string(),
                cell: format!("x{}", i + 1),
                printed: text.parse().expect("printed design variable"),
                computed: *value,
                tolerance: 0.0,
                outcome: if admissible {
                    CellOutcome::Pass
                } else {
                    CellOutcome::Fail
                },
            });
        }

        // g and f cells: re-evaluate and compare against the print
        let mut evaluated: Vec<(String, &str, f64)> = responses
            .iter()
            .enumerate()
            .map(|(j, g)| (format!("g{}", j + 1), row.g[j], g(&x)))
            .collect();
        evaluated.push(("f".to_string(), row.f, problem.objective(&x)));

        for (cell, printed_text, computed) in evaluated {
            let printed: f64 = printed_text.parse().expect("printed cell value");
            let pinned = misprints
                .iter()
                .find(|m| m.row == row.label && m.cell == cell);
            let (tolerance, outcome) = match pinned {
                Some(misprint) => {
                    let tol = PINNED_REL_TOL * misprint.evaluates.abs().max(1.0);
                    let outcome = if (computed - misprint.evaluates).abs() <= tol {
                        CellOutcome::KnownMisprint
                    } else {
                        CellOutcome::Fail
                    };
                    (tol, outcome)
                }
                None => {
                    let tol = cell_tolerance(printed_text, rel_tol);
                    let outcome = if (computed - printed).abs() <= tol {
                        CellOutcome::Pass
                    } else {
                        CellOutcome::Fail
                    };
                    (tol, outcome)
                }
            };
            cells.push(CellCheck {
                row: row.label.to_string(),
                cell,
                printed,
                computed,
                tolerance,
                outcome,
            });
        }
    }
    TableCheck {
        table: table_name.to_string(),
        cells,
        skipped,
    }
}

/// Re-evaluates both bundled reference tables and reports every cell.
pub fn verify_tables() -> TableReport {
    let pv = pressure_vessel().expect("pressure vessel constructs");
    let pv_constraints = pv.constraints();
    let pv_g = |j: usize| move |x: &[f64]| pv_constraints.values(x).expect("finite constraint")[j];
    let (pv_g1, pv_g2, pv_g3, pv_g4) = (pv_g(0), pv_g(1), pv_g(2), pv_g(3));
    let pressure_vessel_check = check_table(
        "pressure-vessel",
        &pv,
        &[&pv_g1, &pv_g2, &pv_g3, &pv_g4],
        PRESSURE_VESSEL_ROWS,
        PRESSURE_VESSEL_MISPRINTS,
        PRESSURE_VESSEL_REL_TOL,
    );

    let hb = himmelblau().expect("himmelblau constructs");
    let himmelblau_check = check_table(
        "himmelblau",
        &hb,
        &[&himmelblau_g1, &himmelblau_g2, &himmelblau_g3],
        HIMMELBLAU_ROWS,
        HIMMELBLAU_MISPRINTS,
        HIMMELBLAU_REL_TOL,
    );

    TableReport {
        tables: vec![pressure_vessel_check, himmelblau_check],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_reference_cells_verify() {
        let report = verify_tables();
        assert!(report.passed(), "failures:\n{}", report.render());
        assert_eq!(report.failures(), 0);
    }

    #[test]
    fn first_pressure_vessel_row_passes_every_cell() {
        let report = verify_tables();
        let pv = &report.tables[0];
        let ref01: Vec<&CellCheck> = pv.cells.iter().filter(|c| c.row == "ref-01").collect();
        assert_eq!(ref01.len(), 9);
        assert!(ref01.iter().all(|c| c.outcome == CellOutcome::Pass));
    }

    #[test]
    fn himmelblau_objectives_reproduce_within_a_tenth_percent() {
        let report = verify_tables();
        let hb = &report.tables[1];
        let f_cells: Vec<&CellCheck> = hb.cells.iter().filter(|c| c.cell == "f").collect();
        assert_eq!(f_cells.len(), 3);
        for cell in f_cells {
            assert!(cell.outcome == CellOutcome::Pass);
            assert!((cell.computed - cell.printed).abs() / cell.printed.abs() < 0.001);
        }
    }

    #[test]
    fn documented_misprints_are_exactly_the_known_set() {
        let report = verify_tables();
        let mut found: Vec<(String, String)> = Vec::new();
        for table in &report.tables {
            for cell in &table.cells {
                if cell.outcome == CellOutcome::KnownMisprint {
                    found.push((format!("{}/{}", table.table, cell.row), cell.cell.clone()));
                }
            }
        }
        let expected = [
            ("pressure-vessel/ref-02", "g1"),
            ("pressure-vessel/ref-02", "f"),
            ("pressure-vessel/ref-03", "g3"),
            ("pressure-vessel/ref-08", "g3"),
            ("pressure-vessel/ref-10", "g4"),
            ("pressure-vessel/ref-11", "g3"),
            ("himmelblau/ref-01", "g1"),
        ];
        assert_eq!(found.len(), expected.len());
        for (row, cell) in expected {
            assert!(
                found.iter().any(|(r, c)| r == row && c == cell),
                "missing documented misprint {row} {cell}"
            );
        }
    }

    #[test]
    fn inconsistent_and_violating_rows_are_skipped_with_notes() {
        let report = verify_tables();
        let pv = &report.tables[0];
        assert_eq!(pv.skipped.len(), 2);
        assert!(pv
            .skipped
            .iter()
            .any(|(row, note)| row == "bas-wpt" && note.contains("cannot be reproduced")));
        assert!(pv.skipped.iter().any(|(row, _)| row == "ref-12"));
        let hb = &report.tables[1];
        assert_eq!(hb.skipped.len(), 2);
        assert!(hb.skipped.iter().any(|(row, _)| row == "bas-wpt"));
        assert!(hb.skipped.iter().any(|(row, _)| row == "ref-04"));
    }

    #[test]
    fn render_mentions_skips_and_misprints() {
        let report = verify_tables();
        let text = report.render();
        assert!(text.contains("skipped bas-wpt"));
        assert!(text.contains("misprint"));
        assert!(text.contains("pressure-vessel reference table"));
        assert!(text.contains("himmelblau reference table"));
    }

    #[test]
    fn half_printed_step_reads_decimal_places() {
        assert_eq!(half_printed_step("-0.0359"), 0.5e-4);
        assert_eq!(half_printed_step("92"), 0.5);
        assert_eq!(half_printed_step("-8.8000e-7"), 0.5e-11);
        assert_eq!(half_printed_step("-9.43E-05"), 0.5e-7);
        assert_eq!(half_printed_step("6059.7258"), 0.5e-4);
    }
}
