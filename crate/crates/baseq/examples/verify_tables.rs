//! Recompute the bundled reference data and diff it against the fixtures.
//!
//! The crate ships the known class counts, the canonical representative
//! codes, and autocorrelation values for small orders as plain-text data.
//! This example re-derives everything up to a chosen order and reports any
//! mismatch, exiting nonzero if one is found.
//!
//! Usage: cargo run --release --example verify_tables [max_n]

use baseq::{render_verify_report, OutputFormat};
use std::process::ExitCode;

fn main() -> ExitCode {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a nonnegative integer"))
        .unwrap_or(8);

    let report = match baseq::fixtures::verify_reference_data(max_n, 0) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    print!(
        "{}",
        render_verify_report(&report, OutputFormat::Text).expect("text rendering")
    );
    if report.all_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}
