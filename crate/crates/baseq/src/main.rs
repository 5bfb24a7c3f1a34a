//! Command-line surface over the library: enumeration, canonicalization,
//! codec, orbit inspection, reference-table verification, and the norm-twin
//! scan.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
//! 3 internal invariant violation.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use baseq::{
    canonicalize, count_classes_jobs, decode, encode, fixtures, norm_twin_groups, orbit,
    render_class_report, render_verify_report, BaseQuadruple, BinarySequence, Error, OutputFormat,
    QuadCode, Result,
};

/// Orders above this need --unbounded: enumeration cost grows sharply and
/// no reference data is bundled past n = 30.
const UNBOUNDED_THRESHOLD: usize = 24;

#[derive(Parser)]
#[command(
    name = "baseq",
    version,
    about = "Classify base sequence quadruples BS(n+1,n): enumerate equivalence \
             classes, canonicalize members, encode and decode quad codes."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate all equivalence classes of BS(n+1,n)
    Enumerate {
        /// The order n (length of C and D)
        n: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Worker threads for the search; 0 = one per core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Allow n beyond the desk-scale guard
        #[arg(long)]
        unbounded: bool,
    },
    /// Print the canonical code of the class containing a code
    Canonicalize {
        /// A quad code such as 06142;1675
        code: String,
        /// The order n the code is for
        #[arg(long)]
        n: usize,
    },
    /// Print the size (and optionally the codes) of a code's group orbit
    Orbit {
        /// A quad code such as 03;1
        code: String,
        /// The order n the code is for
        #[arg(long)]
        n: usize,
        /// Also list the codes of all orbit members
        #[arg(long)]
        members: bool,
    },
    /// Print the four sign sequences a code denotes, one per line
    Decode {
        /// A quad code such as 06142;1675
        code: String,
        /// The order n the code is for
        #[arg(long)]
        n: usize,
    },
    /// Print the quad code of four '+/-' sequences A B C D
    Encode {
        a: String,
        b: String,
        c: String,
        d: String,
    },
    /// Re-enumerate and diff against the bundled reference tables
    VerifyTables {
        /// Check every order up to this one
        max_n: usize,
        /// Output format
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
        /// Worker threads for the search; 0 = one per core
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Allow max_n beyond the desk-scale guard
        #[arg(long)]
        unbounded: bool,
    },
    /// Scan all sign sequences of one length for same-norm pairs that
    /// negation and reversal cannot relate
    NormTwins {
        /// Sequence length to scan (cost grows as 2^len)
        len: usize,
        /// Allow lengths beyond the desk-scale guard
        #[arg(long)]
        unbounded: bool,
    },
}

fn guard(value: usize, what: &str, unbounded: bool) -> Result<()> {
    if value > UNBOUNDED_THRESHOLD && !unbounded {
        return Err(Error::UnsupportedN {
            n: value,
            reason: format!("{what} above {UNBOUNDED_THRESHOLD} needs --unbounded"),
        });
    }
    Ok(())
}

fn parse_member(code: &str, n: usize) -> Result<(QuadCode, BaseQuadruple)> {
    let code = QuadCode::parse(code, n)?;
    let s = decode(&code);
    Ok((code, s))
}

/// Runs one command; Ok(true) means every check passed, Ok(false) means a
/// verification mismatch.
fn run(cmd: Cmd) -> Result<bool> {
    match cmd {
        Cmd::Enumerate {
            n,
            format,
            jobs,
            unbounded,
        } => {
            guard(n, "enumerate", unbounded)?;
            let report = count_classes_jobs(n, jobs)?;
            print!("{}", render_class_report(&report, format.into())?);
            Ok(true)
        }
        Cmd::Canonicalize { code, n } => {
            let (_, s) = parse_member(&code, n)?;
            let canon = canonicalize(&s)?;
            println!("{}", encode(&canon)?);
            Ok(true)
        }
        Cmd::Orbit { code, n, members } => {
            let (_, s) = parse_member(&code, n)?;
            let orb = orbit(&s)?;
            println!("size={} stabilizer_order={}", orb.len(), 4096 / orb.len());
            if members {
                let mut codes: Vec<String> = orb
                    .iter()
                    .map(|m| encode(m).map(|c| c.to_string()))
                    .collect::<Result<_>>()?;
                codes.sort();
                for c in codes {
                    println!("{c}");
                }
            }
            Ok(true)
        }
        Cmd::Decode { code, n } => {
            let (_, s) = parse_member(&code, n)?;
            println!("{}", s.a);
            println!("{}", s.b);
            println!("{}", s.c);
            println!("{}", s.d);
            Ok(true)
        }
        Cmd::Encode { a, b, c, d } => {
            let parse = |t: &str| -> Result<BinarySequence> { t.parse() };
            let s = BaseQuadruple::new(parse(&a)?, parse(&b)?, parse(&c)?, parse(&d)?)?;
            println!("{}", encode(&s)?);
            Ok(true)
        }
        Cmd::VerifyTables {
            max_n,
            format,
            jobs,
            unbounded,
        } => {
            guard(max_n, "verify-tables", unbounded)?;
            let report = fixtures::verify_reference_data(max_n, jobs)?;
            print!("{}", render_verify_report(&report, format.into())?);
            Ok(report.all_ok())
        }
        Cmd::NormTwins { len, unbounded } => {
            guard(len, "norm-twins", unbounded)?;
            let groups = norm_twin_groups(len)?;
            for g in &groups {
                let naf: Vec<String> = g.naf.iter().map(|v| v.to_string()).collect();
                println!("naf={}", naf.join(","));
                for rep in &g.representatives {
                    println!("  {rep}");
                }
            }
            println!("len={} twin_norms={}", len, groups.len());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here with successful status
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e @ Error::Invariant(_)) => {
            eprintln!("internal invariant violated: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
