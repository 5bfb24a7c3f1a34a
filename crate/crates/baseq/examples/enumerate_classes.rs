//! Enumerate the equivalence classes of BS(n+1,n) for a range of orders.
//!
//! For each n this prints the number of classes, how many of them contain
//! normal sequences, and (for small n) the canonical representative codes.
//!
//! Usage: cargo run --release --example enumerate_classes [max_n]

use baseq::{count_classes, render_class_report, OutputFormat};

fn main() -> baseq::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be a nonnegative integer"))
        .unwrap_or(10);

    println!("{:>3}  {:>8}  {:>6}", "n", "classes", "normal");
    for n in 0..=max_n {
        let report = count_classes(n)?;
        println!(
            "{:>3}  {:>8}  {:>6}",
            n, report.class_count, report.normal_count
        );
        if n <= 5 {
            for code in &report.codes {
                println!("       {code}");
            }
        }
    }

    // The same report is available in machine-readable formats.
    let report = count_classes(4)?;
    println!("\ncsv rendering of the n=4 report:");
    print!("{}", render_class_report(&report, OutputFormat::Csv)?);
    println!("\njson rendering of the n=4 report:");
    print!("{}", render_class_report(&report, OutputFormat::Json)?);
    Ok(())
}
