//! `bellkit` command-line interface.
//!
//! Subcommands:
//!
//! * `bell` computes a single partial Bell polynomial with a chosen algorithm.
//! * `stirling` computes a single Stirling number of the second kind.
//! * `table` prints one polynomial per line over an inclusive range of n.
//! * `verify` cross-checks every algorithm against every other on a triangle
//!   of indices and reports a pass/fail matrix.
//! * `bench` times all five Bell algorithms over a grid and emits CSV, with
//!   canonical-form digests doubling as a correctness check.
//!
//! Exit codes: 0 on success, 1 when an internal cross-check fails, 2 on a
//! usage error (including an index above the `BELLKIT_MAX_N` cap).

mod bench;
mod render;
mod verify;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use bellkit::{
    bell, bell_closed_form, stirling_closed_small, stirling_explicit, stirling_from_bell,
    stirling_nested, AlgorithmId, BigInt, Error,
};

const MAX_N_ENV: &str = "BELLKIT_MAX_N";
const DEFAULT_MAX_N: u32 = 64;

#[derive(Parser)]
#[command(
    name = "bellkit",
    version,
    about = "Exact partial Bell polynomials and Stirling numbers of the second kind"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the partial Bell polynomial B(n, k).
    Bell {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// One of partition, recurrence, convolution, closed_form, series_oracle.
        #[arg(long, default_value = "partition")]
        algo: AlgorithmId,
        /// One of text, latex, json.
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Compute the Stirling number S(n, k).
    Stirling {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// One of explicit, nested, closed_small, from_bell.
        #[arg(long, default_value = "explicit")]
        method: Method,
        /// One of text, latex, json.
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Print B(n, k) for every n in an inclusive range, one polynomial per line.
    Table {
        /// Inclusive range written as a..b, for example 8..13.
        #[arg(long, value_parser = parse_range)]
        n_range: (u32, u32),
        #[arg(long)]
        k: u32,
        /// One of text, latex, json.
        #[arg(long, default_value = "text")]
        format: OutputFormat,
    },
    /// Cross-check all algorithms for every 1 <= k <= n <= max_n.
    Verify {
        #[arg(long, default_value_t = 13)]
        max_n: u32,
    },
    /// Time all five Bell algorithms over a grid and print CSV rows.
    Bench {
        #[arg(long)]
        max_n: u32,
        /// Comma-separated list of k values; rows cover k < n <= max_n.
        #[arg(long, value_delimiter = ',', required = true)]
        k_list: Vec<u32>,
        /// Timing repetitions per row; the minimum wall time is reported.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        repetitions: u32,
    },
}

/// Output rendering selected by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Latex,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "latex" => Ok(OutputFormat::Latex),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!(
                "unknown format '{other}' (expected text, latex, or json)"
            )),
        }
    }
}

/// Stirling number evaluation route selected by `--method`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Explicit,
    Nested,
    ClosedSmall,
    FromBell,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "explicit" => Ok(Method::Explicit),
            "nested" => Ok(Method::Nested),
            "closed_small" => Ok(Method::ClosedSmall),
            "from_bell" => Ok(Method::FromBell),
            other => Err(format!(
                "unknown method '{other}' (expected explicit, nested, closed_small, or from_bell)"
            )),
        }
    }
}

/// A command failure carrying the process exit code it maps to.
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    /// Bad input from the operator: exit code 2.
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    /// A broken internal invariant or failed cross-check: exit code 1.
    pub fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    /// Library errors split the same way: index and selection problems are the
    /// operator's, everything else means an invariant did not hold.
    pub fn from_error(err: Error) -> Self {
        let code = match err {
            Error::InvalidIndex { .. }
            | Error::InvalidSplit { .. }
            | Error::InvalidExponent { .. }
            | Error::UnsupportedK { .. }
            | Error::UnknownAlgorithm { .. } => 2,
            _ => 1,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("range '{s}' is not of the form a..b"))?;
    let lo: u32 = lo
        .parse()
        .map_err(|_| format!("range start '{lo}' is not a non-negative integer"))?;
    let hi: u32 = hi
        .parse()
        .map_err(|_| format!("range end '{hi}' is not a non-negative integer"))?;
    if lo > hi {
        return Err(format!("range {lo}..{hi} is empty (start exceeds end)"));
    }
    Ok((lo, hi))
}

/// Largest n any subcommand may touch, from `BELLKIT_MAX_N` (default 64).
fn max_n_cap() -> Result<u32, Failure> {
    match std::env::var(MAX_N_ENV) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_N),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(Failure::usage(format!("{MAX_N_ENV} is not valid unicode")))
        }
        Ok(raw) => raw.trim().parse().map_err(|_| {
            Failure::usage(format!("{MAX_N_ENV}='{raw}' is not a non-negative integer"))
        }),
    }
}

fn check_cap(n: u32) -> Result<(), Failure> {
    let cap = max_n_cap()?;
    if n > cap {
        return Err(Failure::usage(format!(
            "n = {n} exceeds the {MAX_N_ENV} cap of {cap}"
        )));
    }
    Ok(())
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Bell { n, k, algo, format } => {
            check_cap(n)?;
            let p = bell(n, k, algo).map_err(Failure::from_error)?;
            println!("{}", render::polynomial(format, n, k, &p));
            Ok(())
        }
        Command::Stirling {
            n,
            k,
            method,
            format,
        } => {
            check_cap(n)?;
            let value: BigInt = match method {
                Method::Explicit => stirling_explicit(n, k),
                Method::Nested => stirling_nested(n, k).map_err(Failure::from_error)?,
                Method::ClosedSmall => stirling_closed_small(n, k).map_err(Failure::from_error)?,
                Method::FromBell => stirling_from_bell(n, k).map_err(Failure::from_error)?,
            };
            println!("{}", render::integer(format, n, k, &value));
            Ok(())
        }
        Command::Table { n_range, k, format } => {
            check_cap(n_range.1)?;
            for n in n_range.0..=n_range.1 {
                let p = bell_closed_form(n, k).map_err(Failure::from_error)?;
                println!("{}", render::polynomial(format, n, k, &p));
            }
            Ok(())
        }
        Command::Verify { max_n } => {
            if max_n < 1 {
                return Err(Failure::usage("--max-n must be at least 1"));
            }
            check_cap(max_n)?;
            verify::run(max_n)
        }
        Command::Bench {
            max_n,
            k_list,
            repetitions,
        } => {
            check_cap(max_n)?;
            bench::run(max_n, &k_list, repetitions)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
