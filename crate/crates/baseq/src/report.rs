//! Rendering of enumeration and verification results as plain text, CSV,
//! or JSON.

use std::fmt;
use std::str::FromStr;

use crate::enumerate::{code_is_normal, ClassReport};
use crate::error::{Error, Result};
use crate::fixtures::VerifyReport;
use crate::quad::QuadSymbol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    /// One code per line, then a one-line summary.
    Text,
    /// Header `n,index,p,q,normal`, one row per class.
    Csv,
    /// The whole report as a JSON object.
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Self::Text),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::Invariant(format!(
                "unknown output format {other}; expected text, csv, or json"
            ))),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Text => "text",
            Self::Csv => "csv",
            Self::Json => "json",
        })
    }
}

fn half_text(symbols: &[QuadSymbol]) -> String {
    symbols.iter().map(|s| s.to_string()).collect()
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Invariant(format!("JSON serialization: {e}")))?;
    s.push('\n');
    Ok(s)
}

/// Renders an enumeration result in the requested format.
pub fn render_class_report(report: &ClassReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            for code in &report.codes {
                out.push_str(&code.to_string());
                out.push('\n');
            }
            out.push_str(&format!(
                "n={} classes={} normal={}\n",
                report.n, report.class_count, report.normal_count
            ));
            Ok(out)
        }
        OutputFormat::Csv => {
            let mut out = String::from("n,index,p,q,normal\n");
            for (i, code) in report.codes.iter().enumerate() {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    report.n,
                    i + 1,
                    half_text(code.p()),
                    half_text(code.q()),
                    code_is_normal(code)
                ));
            }
            Ok(out)
        }
        OutputFormat::Json => to_json(report),
    }
}

/// Renders a reference-data verification in the requested format.
pub fn render_verify_report(report: &VerifyReport, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Text => {
            let mut out = String::new();
            let mut failed = 0usize;
            for o in &report.outcomes {
                if o.ok {
                    out.push_str(&format!("ok   {}\n", o.label));
                } else {
                    failed += 1;
                    out.push_str(&format!("FAIL {}: {}\n", o.label, o.detail));
                }
            }
            let total = report.outcomes.len();
            if failed == 0 {
                out.push_str(&format!("all {total} checks passed\n"));
            } else {
                out.push_str(&format!("{failed} of {total} checks failed\n"));
            }
            Ok(out)
        }
        OutputFormat::Csv => {
            let mut out = String::from("label,ok,detail\n");
            for o in &report.outcomes {
                let detail = o.detail.replace(',', ";").replace('\n', " ");
                out.push_str(&format!("{},{},{}\n", o.label, o.ok, detail));
            }
            Ok(out)
        }
        OutputFormat::Json => to_json(report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::count_classes;

    #[test]
    fn formats_parse_and_render() {
        let report = count_classes(4).unwrap();
        let text = render_class_report(&report, "text".parse().unwrap()).unwrap();
        assert_eq!(text, "060;16\n082;12\n083;16\nn=4 classes=3 normal=2\n");
        let csv = render_class_report(&report, "csv".parse().unwrap()).unwrap();
        assert!(csv.starts_with("n,index,p,q,normal\n4,1,060,16,true\n"));
        assert!(csv.contains("4,2,082,12,false\n"));
        let json = render_class_report(&report, "json".parse().unwrap()).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["class_count"], 3);
        assert_eq!(value["codes"][0], "060;16");
        assert!("yaml".parse::<OutputFormat>().is_err());
    }

    #[test]
    fn verify_rendering_counts_failures() {
        use crate::fixtures::{VerifyOutcome, VerifyReport};
        let report = VerifyReport {
            outcomes: vec![
                VerifyOutcome { label: "a".into(), ok: true, detail: String::new() },
                VerifyOutcome { label: "b".into(), ok: false, detail: "x, y".into() },
            ],
        };
        let text = render_verify_report(&report, OutputFormat::Text).unwrap();
        assert!(text.contains("ok   a\n"));
        assert!(text.contains("FAIL b: x, y\n"));
        assert!(text.ends_with("1 of 2 checks failed\n"));
        let csv = render_verify_report(&report, OutputFormat::Csv).unwrap();
        assert!(csv.contains("b,false,x; y\n"));
    }
}
