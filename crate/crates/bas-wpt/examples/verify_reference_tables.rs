//! Re-evaluates the bundled benchmark reference tables.
//!
//! Every published row's design variables are pushed through the shipped
//! objective and constraint definitions; each cell must match its printed
//! value within the table tolerance (documented misprint cells are pinned
//! to their re-evaluated values instead and reported as notes).
//!
//! ```bash
//! cargo run --example verify_reference_tables
//! ```

use bas_wpt::verify_tables;

fn main() {
    let report = verify_tables();
    print!("{}", report.render());
    println!(
        "overall: {} ({} documented misprints, {} failures)",
        if report.passed() { "PASS" } else { "FAIL" },
        report.misprints(),
        report.failures()
    );
    std::process::exit(if report.passed() { 0 } else { 1 });
}
