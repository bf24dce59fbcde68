//! Run the Slope / Strong Slope / nonpositive-linear-term checks over the
//! whole catalog and print one verdict line per check.
//!
//! Run: cargo run --release --example conjecture_checks

use cabled_jones::checker::{catalog_report, CheckStatus};
use cabled_jones::families::{catalog, catalog_names};

fn main() -> Result<(), cabled_jones::Error> {
    let mut names: Vec<String> = catalog_names().iter().map(|s| s.to_string()).collect();
    names.extend([7, 9, 11].iter().map(|p| format!("pretzel(-2,3,{p})")));

    let mut failures = 0;
    for name in &names {
        let report = catalog_report(&catalog(name)?);
        println!("{name}:");
        for check in &report.checks {
            let mark = match check.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Inapplicable => "n/a ",
            };
            println!("  [{mark}] {:12} {}", check.conjecture.as_str(), check.details);
            if check.status == CheckStatus::Fail {
                failures += 1;
            }
        }
    }
    println!("\n{} knots checked, {failures} failures", names.len());
    assert_eq!(failures, 0);
    Ok(())
}
