//! Command-line front end: single checks, twin checks, range verification,
//! and benchmarks. Records go to stdout, diagnostics to stderr; exit code
//! 0 means the run worked (whatever the verdict), 1 means a verification
//! scan found an unexpected mismatch, 2 means a usage or domain error.

use crate::error::Error;
use crate::harness::{bench_method, verify_range_capped, DEFAULT_VERIFY_CAP};
use crate::oracle::trial_division_is_prime;
use crate::output::{render, BenchRow, CheckRecord, OutputFormat, Record, TwinsRecord, VerifyRecord};
use crate::theorems::{
    clement_test, theorem1_raw, theorem1_test, theorem2_raw, theorem2_test, wilson_test, Method,
};
use clap::{Parser, Subcommand, ValueEnum};
use std::fmt;
use std::io::{self, Write};

/// Inclusive ceiling on every numeric CLI input: values above 2^62 are
/// rejected up front instead of truncated.
pub const INPUT_LIMIT: u64 = 1 << 62;

fn parse_u62(s: &str) -> Result<u64, String> {
    let value: u64 = s
        .parse()
        .map_err(|_| format!("'{s}' is not a base-10 integer in [0, 2^62]"))?;
    if value > INPUT_LIMIT {
        return Err(format!("{value} exceeds the 2^62 input limit"));
    }
    Ok(value)
}

/// The test selectable from the command line. The oracle is not listed:
/// it is the reference the others are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    #[value(name = "wilson")]
    Wilson,
    #[value(name = "theorem1")]
    Theorem1,
    #[value(name = "clement")]
    Clement,
    #[value(name = "theorem2")]
    Theorem2,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Wilson => Method::Wilson,
            MethodArg::Theorem1 => Method::Theorem1,
            MethodArg::Clement => Method::Clement,
            MethodArg::Theorem2 => Method::Theorem2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "factoria",
    version,
    about = "Factorial-congruence primality and twin-prime tests, verified against an independent oracle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format for records.
    #[arg(long, global = true, value_enum, default_value = "table")]
    pub format: OutputFormat,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Test one number for primality (wilson or theorem1).
    Check {
        /// Number to test.
        #[arg(value_parser = parse_u62)]
        n: u64,
        /// Congruence to apply.
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Apply the congruence verbatim, skipping exception handling;
        /// adds an oracle_mismatch column.
        #[arg(long)]
        raw: bool,
    },
    /// Test whether n and n+2 are twin primes (clement or theorem2).
    Twins {
        /// Smaller member of the candidate pair.
        #[arg(value_parser = parse_u62)]
        n: u64,
        /// Congruence to apply.
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Apply the congruence verbatim, skipping exception handling;
        /// adds an oracle_mismatch column.
        #[arg(long)]
        raw: bool,
    },
    /// Compare a method against the oracle over [lo, hi].
    Verify {
        #[arg(value_enum)]
        method: MethodArg,
        #[arg(value_parser = parse_u62)]
        lo: u64,
        #[arg(value_parser = parse_u62)]
        hi: u64,
        /// Scan the raw form; its exception set becomes the expectation.
        #[arg(long)]
        raw: bool,
        /// Range ceiling override (default 100000).
        #[arg(long, env = "FACTORIA_CAP", value_parser = parse_u62)]
        cap: Option<u64>,
    },
    /// Time a method on lo, lo+step, ... up to hi.
    Bench {
        #[arg(value_enum)]
        method: MethodArg,
        #[arg(value_parser = parse_u62)]
        lo: u64,
        #[arg(value_parser = parse_u62)]
        hi: u64,
        #[arg(value_parser = parse_u62)]
        step: u64,
        /// Timed repetitions per input (default 5).
        #[arg(value_parser = parse_u62)]
        reps: Option<u64>,
        /// Repetitions, as a flag instead of the positional.
        #[arg(long = "reps", value_name = "REPS", value_parser = parse_u62, conflicts_with = "reps")]
        reps_flag: Option<u64>,
    },
}

enum CmdError {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> CmdError {
        CmdError::Domain(e)
    }
}

impl From<io::Error> for CmdError {
    fn from(e: io::Error) -> CmdError {
        CmdError::Io(e)
    }
}

impl fmt::Display for CmdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmdError::Domain(e) => e.fmt(f),
            CmdError::Io(e) => write!(f, "output failed: {e}"),
        }
    }
}

/// Runs a parsed command line against the given streams and returns the
/// process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<u8, CmdError> {
    let format = cli.format;
    match cli.command {
        Command::Check { n, method, raw } => {
            let verdict = match Method::from(method) {
                Method::Wilson => wilson_test(n)?, // exceptionless: raw = corrected
                Method::Theorem1 => {
                    if raw {
                        theorem1_raw(n)?
                    } else {
                        theorem1_test(n)?
                    }
                }
                twin => return Err(Error::NotAPrimalityMethod(twin.name()).into()),
            };
            let mismatch = raw.then(|| verdict.is_prime != trial_division_is_prime(n));
            print_one(&CheckRecord::new(&verdict, raw, mismatch), format, out)?;
            Ok(0)
        }
        Command::Twins { n, method, raw } => {
            let verdict = match Method::from(method) {
                Method::Clement => clement_test(n)?, // exceptionless: raw = corrected
                Method::Theorem2 => {
                    if raw {
                        theorem2_raw(n)?
                    } else {
                        theorem2_test(n)?
                    }
                }
                single => return Err(Error::NotATwinMethod(single.name()).into()),
            };
            let twin_truth = trial_division_is_prime(n) && trial_division_is_prime(n + 2);
            let mismatch = raw.then_some(verdict.is_twin_pair != twin_truth);
            print_one(&TwinsRecord::new(&verdict, raw, mismatch), format, out)?;
            Ok(0)
        }
        Command::Verify {
            method,
            lo,
            hi,
            raw,
            cap,
        } => {
            let cap = cap.unwrap_or(DEFAULT_VERIFY_CAP);
            let report = verify_range_capped(method.into(), lo, hi, raw, cap)?;
            print_one(&VerifyRecord::new(&report, raw), format, out)?;
            Ok(if report.conforms { 0 } else { 1 })
        }
        Command::Bench {
            method,
            lo,
            hi,
            step,
            reps,
            reps_flag,
        } => {
            if step == 0 {
                return Err(Error::BelowFloor {
                    what: "bench step",
                    floor: 1,
                    n: 0,
                }
                .into());
            }
            if hi < lo {
                return Err(Error::EmptyRange { lo, hi }.into());
            }
            let mut inputs = Vec::new();
            let mut x = lo;
            while x <= hi {
                inputs.push(x);
                match x.checked_add(step) {
                    Some(next) => x = next,
                    None => break,
                }
            }
            let repetitions = reps.or(reps_flag).unwrap_or(5);
            let records = bench_method(method.into(), &inputs, repetitions)?;
            let rows: Vec<BenchRow> = records.iter().map(BenchRow::from).collect();
            render(&rows, format, out)?;
            Ok(0)
        }
    }
}

fn print_one<R: Record>(record: &R, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    render(std::slice::from_ref(record), format, out)
}
