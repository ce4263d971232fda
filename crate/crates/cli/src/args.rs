use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use smarand_core::census::CensusKind;
use smarand_core::irrationality::Epsilon;
use smarand_core::ExponentK;

use crate::numbers::{parse_big_count, parse_count};

/// Exact computations with the Smarandache function S(n) and the largest
/// prime factor P(n). Results are written as CSV.
#[derive(Debug, Clone, Parser)]
#[command(name = "smarand", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write CSV here (plus a `<out>.manifest` sidecar) instead of stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for the segmented sweeps
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Size of the S/P table; defaults to the largest x requested
    #[arg(long, global = true, value_parser = parse_count)]
    pub table_limit: Option<u64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// S(n), P(n) and the factorization of n
    Eval {
        #[arg(long, value_parser = parse_count)]
        n: u64,
    },
    /// Count n <= x satisfying one of the census predicates
    Census {
        /// n-neq-p, nk, nk1, nk2, m or psi
        #[arg(long)]
        kind: CensusKind,
        #[arg(long, value_parser = parse_count)]
        x: u64,
        /// Exponent for the nk kinds, as p/q, an integer or an exact decimal
        #[arg(long)]
        k: Option<ExponentK>,
        /// Smoothness bound for psi
        #[arg(long, value_parser = parse_count)]
        y: Option<u64>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Run an invariant suite and report pass/fail per check
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Bound diagnostics over an ascending grid of x
    Sweep {
        #[arg(long, value_enum)]
        kind: SweepKind,
        /// Comma-separated, strictly ascending, each at least 17
        #[arg(long, value_parser = parse_count, value_delimiter = ',', required = true)]
        x: Vec<u64>,
        #[arg(long)]
        k: Option<ExponentK>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Lower bounds for |e - m/n|
    #[command(group(ArgGroup::new("mode").required(true).args(["n", "max_n", "convergents"])))]
    Approx {
        /// A single denominator
        #[arg(long, value_parser = parse_big_count)]
        n: Option<BigUint>,
        /// Numerator for --n; defaults to round(e n)
        #[arg(long, requires = "n", allow_hyphen_values = true)]
        m: Option<BigInt>,
        /// Every denominator in [2, max-n], with m = round(e n)
        #[arg(long, value_parser = parse_count)]
        max_n: Option<u64>,
        /// Convergents of e with denominator up to this value
        #[arg(long, value_parser = parse_count)]
        convergents: Option<u64>,
        /// Exponent slack in 1/n^(2+eps), rational
        #[arg(long, default_value = "0")]
        eps: Epsilon,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Divisor enumeration above 10^7, the S/P table otherwise
    Auto,
    Table,
    Divisors,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemma2,
    CaseI,
    Eq5,
    Thm1,
    Thm2,
    SondowE,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Lemma2 => "lemma2",
            Suite::CaseI => "case-i",
            Suite::Eq5 => "eq5",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::SondowE => "sondow-e",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepKind {
    Thm1,
    Thm2,
}
