//! Golden reference data and the checks that compare the library's output
//! against it.
//!
//! Three plain-text tables ship inside the crate: known class and normal
//! counts for n <= 30, the canonical representative codes for 1 <= n <= 13,
//! and autocorrelation vectors of the representatives for n <= 8. Setting
//! the environment variable `BASEQ_FIXTURES` to a directory containing files
//! of the same names overrides the embedded copies.

use std::borrow::Cow;
use std::collections::BTreeMap;
use std::path::Path;

use crate::enumerate::{count_classes_jobs, ClassReport};
use crate::error::{Error, Result};
use crate::quad::{decode, QuadCode};

pub const CLASS_COUNTS_FILE: &str = "class_counts.txt";
pub const REPRESENTATIVES_FILE: &str = "representatives.txt";
pub const NAF_REFERENCE_FILE: &str = "naf_reference.txt";

fn raw_file(name: &str) -> Result<Cow<'static, str>> {
    if let Ok(dir) = std::env::var("BASEQ_FIXTURES") {
        return Ok(Cow::Owned(std::fs::read_to_string(Path::new(&dir).join(name))?));
    }
    let embedded = match name {
        CLASS_COUNTS_FILE => include_str!("../data/class_counts.txt"),
        REPRESENTATIVES_FILE => include_str!("../data/representatives.txt"),
        NAF_REFERENCE_FILE => include_str!("../data/naf_reference.txt"),
        _ => {
            return Err(Error::FixtureFormat {
                line: 0,
                reason: format!("unknown fixture file {name}"),
            })
        }
    };
    Ok(Cow::Borrowed(embedded))
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// One row of the known-counts table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountsRow {
    pub n: usize,
    pub classes: usize,
    pub normal: usize,
}

/// Known class and normal counts, one row per n, ascending.
pub fn class_counts() -> Result<Vec<CountsRow>> {
    let text = raw_file(CLASS_COUNTS_FILE)?;
    let mut out = Vec::new();
    for (line, l) in data_lines(&text) {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [n, classes, normal] = fields[..] else {
            return Err(Error::FixtureFormat {
                line,
                reason: format!("expected 3 columns, got {}", fields.len()),
            });
        };
        let parse = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::FixtureFormat {
                line,
                reason: format!("bad integer {s}"),
            })
        };
        out.push(CountsRow {
            n: parse(n)?,
            classes: parse(classes)?,
            normal: parse(normal)?,
        });
    }
    Ok(out)
}

/// Canonical representative codes keyed by n, each list lexicographic.
pub fn representatives() -> Result<BTreeMap<usize, Vec<QuadCode>>> {
    let text = raw_file(REPRESENTATIVES_FILE)?;
    let mut out: BTreeMap<usize, Vec<QuadCode>> = BTreeMap::new();
    for (line, l) in data_lines(&text) {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [n, code] = fields[..] else {
            return Err(Error::FixtureFormat {
                line,
                reason: format!("expected 2 columns, got {}", fields.len()),
            });
        };
        let n: usize = n.parse().map_err(|_| Error::FixtureFormat {
            line,
            reason: format!("bad integer {n}"),
        })?;
        let code = QuadCode::parse(code, n).map_err(|e| Error::FixtureFormat {
            line,
            reason: format!("bad code: {e}"),
        })?;
        out.entry(n).or_default().push(code);
    }
    Ok(out)
}

/// One row of the autocorrelation reference.
#[derive(Debug, Clone)]
pub struct NafRow {
    pub n: usize,
    /// 1-based position of the code within its order's representative list.
    pub index: usize,
    pub code: QuadCode,
    pub na: Vec<i32>,
    pub nb: Vec<i32>,
    pub nc: Vec<i32>,
    pub nd: Vec<i32>,
    /// True where the transcription source was ambiguous and the values
    /// were rederived from the decoded sequences.
    pub recomputed: bool,
}

/// Reference autocorrelation vectors for the representatives with n <= 8.
pub fn naf_reference() -> Result<Vec<NafRow>> {
    let text = raw_file(NAF_REFERENCE_FILE)?;
    let mut out = Vec::new();
    for (line, l) in data_lines(&text) {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let [n, index, code, na, nb, nc, nd, flag] = fields[..] else {
            return Err(Error::FixtureFormat {
                line,
                reason: format!("expected 8 columns, got {}", fields.len()),
            });
        };
        let n: usize = n.parse().map_err(|_| Error::FixtureFormat {
            line,
            reason: format!("bad integer {n}"),
        })?;
        let vec = |s: &str| -> Result<Vec<i32>> {
            s.split(',')
                .map(|t| {
                    t.parse().map_err(|_| Error::FixtureFormat {
                        line,
                        reason: format!("bad value list {s}"),
                    })
                })
                .collect()
        };
        let recomputed = match flag {
            "printed" => false,
            "recomputed" => true,
            other => {
                return Err(Error::FixtureFormat {
                    line,
                    reason: format!("unknown flag {other}"),
                })
            }
        };
        out.push(NafRow {
            n,
            index: index.parse().map_err(|_| Error::FixtureFormat {
                line,
                reason: format!("bad integer {index}"),
            })?,
            code: QuadCode::parse(code, n).map_err(|e| Error::FixtureFormat {
                line,
                reason: format!("bad code: {e}"),
            })?,
            na: vec(na)?,
            nb: vec(nb)?,
            nc: vec(nc)?,
            nd: vec(nd)?,
            recomputed,
        });
    }
    Ok(out)
}

/// One comparison between computed output and the reference data.
#[derive(Debug, Clone, serde::Serialize)]
pub struct VerifyOutcome {
    pub label: String,
    pub ok: bool,
    /// Empty when ok; otherwise what differed.
    pub detail: String,
}

/// The result of re-deriving the reference data from scratch.
#[derive(Debug, Clone, serde::Serialize)]
pub struct VerifyReport {
    pub outcomes: Vec<VerifyOutcome>,
}

impl VerifyReport {
    pub fn all_ok(&self) -> bool {
        self.outcomes.iter().all(|o| o.ok)
    }
}

fn push_check(outcomes: &mut Vec<VerifyOutcome>, label: String, ok: bool, detail: String) {
    outcomes.push(VerifyOutcome {
        label,
        ok,
        detail: if ok { String::new() } else { detail },
    });
}

/// Re-enumerates every order up to `max_n` and compares counts, codes, and
/// autocorrelation vectors against the reference tables. `jobs` = 0 uses the
/// default thread pool.
pub fn verify_reference_data(max_n: usize, jobs: usize) -> Result<VerifyReport> {
    let counts = class_counts()?;
    let reps = representatives()?;
    let mut outcomes = Vec::new();
    let mut reports: BTreeMap<usize, ClassReport> = BTreeMap::new();
    for n in 0..=max_n {
        reports.insert(n, count_classes_jobs(n, jobs)?);
    }
    for row in counts.iter().filter(|r| r.n <= max_n) {
        let report = &reports[&row.n];
        push_check(
            &mut outcomes,
            format!("counts n={}", row.n),
            report.class_count == row.classes && report.normal_count == row.normal,
            format!(
                "classes {} (reference {}), normal {} (reference {})",
                report.class_count, row.classes, report.normal_count, row.normal
            ),
        );
    }
    for (&n, want) in reps.iter().filter(|(&n, _)| n <= max_n) {
        let got = &reports[&n].codes;
        let ok = got == want;
        let detail = if ok {
            String::new()
        } else {
            let missing: Vec<String> = want
                .iter()
                .filter(|c| !got.contains(c))
                .map(|c| c.to_string())
                .collect();
            let extra: Vec<String> = got
                .iter()
                .filter(|c| !want.contains(c))
                .map(|c| c.to_string())
                .collect();
            format!(
                "{} enumerated vs {} reference codes; missing [{}]; extra [{}]",
                got.len(),
                want.len(),
                missing.join(" "),
                extra.join(" ")
            )
        };
        push_check(&mut outcomes, format!("codes n={n}"), ok, detail);
    }
    for row in naf_reference()?.iter().filter(|r| r.n <= max_n) {
        let s = decode(&row.code);
        let got = [
            s.a.naf_vector().values().to_vec(),
            s.b.naf_vector().values().to_vec(),
            s.c.naf_vector().values().to_vec(),
            s.d.naf_vector().values().to_vec(),
        ];
        let want = [&row.na, &row.nb, &row.nc, &row.nd];
        let ok = got.iter().zip(&want).all(|(g, w)| g == *w);
        push_check(
            &mut outcomes,
            format!("autocorrelation n={} #{} {}", row.n, row.index, row.code),
            ok,
            format!("computed {:?}, reference {:?}", got, want),
        );
    }
    Ok(VerifyReport { outcomes })
}
