// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "flagbound",
    version,
    about = "Exact bounds on the number of threshold functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// Worker threads (default: `FLAGBOUND_THREADS`, else all cores).
    /// Results do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Fast,
    Full,
}

/// Either `E(n)` or a vector-set file.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Use the vectors (1, ±1, ..., ±1) in dimension n + 1.
    #[arg(long)]
    pub n: Option<usize>,
    /// Read a vector-set file.
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write E(n) as a vector-set file.
    GenE {
        #[arg(long)]
        n: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Count chambers from the intersection lattice.
    Chambers {
        #[command(flatten)]
        source: Source,
        /// Cross-check by deletion–restriction.
        #[arg(long)]
        oracle: bool,
    },
    /// Count the order-minimal tuples under the identity and random orders.
    Lambda {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 0)]
        order_seed: u64,
        #[arg(long, default_value_t = 0)]
        order_trials: usize,
    },
    /// The lower bound 2 × (weighted flag sum) for E(n).
    Bound {
        #[arg(long)]
        n: usize,
        /// A weight file, `uniform`, or `random:<seed>:<count>`.
        #[arg(long, default_value = "uniform")]
        weights: String,
    },
    /// Rank of the reduced homology of the non-spanning complex.
    Homology {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_negative_numbers = true)]
        degree: i64,
        /// A prime, or `Q` for the rationals.
        #[arg(long, default_value = "2")]
        field: String,
    },
    /// Count threshold functions of n variables by testing every truth table.
    CountThreshold {
        #[arg(long)]
        n: usize,
    },
    /// Sample orders and average the tuple count.
    MonteCarlo {
        #[command(flatten)]
        source: Source,
        /// A weight file or `uniform`.
        #[arg(long, default_value = "uniform")]
        weights: String,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the identity suite with one line per check.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lower bound, chamber count, brute force and upper bound for E(n).
    Report {
        #[arg(long)]
        n: usize,
    },
}
