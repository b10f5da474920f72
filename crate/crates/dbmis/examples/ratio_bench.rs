//! Runs two benchmark suites against the exact oracle and prints their
//! CSV reports with exact rational ratios.

use dbmis::bench::{render_report, run_ratio_suite, Suite};

fn main() -> dbmis::Result<()> {
    for suite in [Suite::Bundled, Suite::Exchange] {
        let report = run_ratio_suite(suite, 8, 12345)?;
        print!("{}", render_report(&report));
        report.assert_no_violations()?;
        println!();
    }
    println!("both suites stayed above their hard ratio floors");
    Ok(())
}
