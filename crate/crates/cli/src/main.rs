//! `padic`: command-line front end for padic-deform.
//!
//! Exit codes: 0 when every invoked check passes, 1 on a failed
//! verification or fixture mismatch, 2 on usage errors, 3 on precision or
//! truncation errors.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use padic_deform::Error;

#[derive(Parser, Debug)]
#[command(
    name = "padic",
    version,
    about = "Exact p-adic deformation arithmetic and verification suites"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Prime p
    #[arg(short = 'p', global = true)]
    pub p: Option<u32>,
    /// Extension degree n (q = p^n)
    #[arg(short = 'n', global = true)]
    pub n: Option<u32>,
    /// Absolute precision N (work mod p^N)
    #[arg(short = 'N', global = true)]
    pub precision: Option<u32>,
    /// Initial number of Dwork series terms
    #[arg(short = 'K', global = true)]
    pub terms: Option<usize>,
    /// Seed for the randomized sweeps
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Compare the JSON output with this file, or write it if missing
    #[arg(long, global = true)]
    pub fixtures: Option<PathBuf>,
    /// Run sweeps on one thread
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Teichmüller lift of the F_q element with base-p index v
    Teich {
        #[arg(short = 'v')]
        v: u64,
    },
    /// Canonical Frobenius lift of x (comma-separated coefficients)
    Frobenius {
        #[arg(short = 'x', allow_hyphen_values = true)]
        x: String,
    },
    /// Buium p-derivation of x (comma-separated coefficients)
    Delta {
        #[arg(short = 'x', allow_hyphen_values = true)]
        x: String,
    },
    /// Morita Gamma_p at x, or the table for 0..upto
    Gamma {
        #[arg(
            short = 'x',
            allow_hyphen_values = true,
            required_unless_present = "upto"
        )]
        x: Option<i64>,
        #[arg(long)]
        upto: Option<u64>,
    },
    /// p-adic Beta Gamma_p(a) Gamma_p(b) / Gamma_p(a + b)
    Beta {
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: i64,
        #[arg(short = 'b', allow_hyphen_values = true)]
        b: i64,
    },
    /// Jacobi sum J(tau^a, tau^b) over F_q
    Jacobi {
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: i64,
        #[arg(short = 'b', allow_hyphen_values = true)]
        b: i64,
    },
    /// Gauss sum of tau^a over F_p in the pi-ring
    Gauss {
        #[arg(short = 'a', allow_hyphen_values = true)]
        a: i64,
    },
    /// Gross–Koblitz cross-check for one a or all 0 < a < p - 1
    GkCheck {
        #[arg(short = 'a')]
        a: Option<i64>,
    },
    /// Affine points on x^m + y^m = 1 over F_q, brute force and via Jacobi sums
    Fermat {
        #[arg(short = 'q')]
        q: u64,
        #[arg(short = 'm')]
        m: u64,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random samples per parameter set
        #[arg(long, default_value_t = 1000)]
        samples: u64,
    },
}

pub enum Failure {
    Library(Error),
    Fixture(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::dispatch(&cli) {
        Ok(out) => {
            let status = match output::emit(&out, &cli.config) {
                Ok(()) => out.pass,
                Err(Failure::Fixture(msg)) => {
                    eprintln!("fixture mismatch: {msg}");
                    false
                }
                Err(Failure::Library(e)) => return library_error(e),
            };
            eprintln!("{}", out.summary);
            if status {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Library(e)) => library_error(e),
        Err(Failure::Fixture(msg)) => {
            eprintln!("fixture error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn library_error(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    if e.is_precision() {
        ExitCode::from(3)
    } else {
        ExitCode::from(2)
    }
}
