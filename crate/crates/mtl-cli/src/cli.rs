use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

/// Pointwise MTL toolkit: parsing, evaluation, past elimination and differential testing.
#[derive(Debug, Parser)]
#[command(name = "mtl", version, about, after_help = EXIT_CODES)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

const EXIT_CODES: &str = "Exit codes:
  0  ok, satisfiable, holds
  1  unsatisfiable at scale, violated, or a failing run
  2  usage, parse or unsupported-input error
  3  internal invariant failure

The MTL_WORKERS environment variable sets the worker count for fuzz and sat.";

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a formula (or a timed word with --word) and print diagnostics.
    Parse {
        #[command(flatten)]
        input: Source,
        /// Treat the input as a timed word.
        #[arg(long)]
        word: bool,
    },
    /// Evaluate a formula on a timed word.
    Eval {
        #[command(flatten)]
        formula: Source,
        /// Path of the timed word file, or `-` for standard input.
        #[arg(long, short = 'w')]
        word: PathBuf,
        /// 1-based position to evaluate at.
        #[arg(long, default_value_t = 1)]
        pos: usize,
    },
    /// Eliminate past operators and print the reduced formula with its manifest.
    Reduce {
        #[command(flatten)]
        formula: Source,
        #[arg(long, short = 'm', default_value = "oversample")]
        method: String,
        #[command(flatten)]
        sigma: SigmaArg,
        /// Write the formula here and the manifest next to it with a `.manifest` suffix.
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
    /// Differential test of a reduction: constructive and projection families.
    Fuzz {
        #[command(flatten)]
        formula: Source,
        #[arg(long, short = 'm', default_value = "oversample")]
        method: String,
        #[command(flatten)]
        sigma: SigmaArg,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Search for a model over a bounded grid of words.
    Sat {
        #[command(flatten)]
        formula: Source,
        #[command(flatten)]
        sigma: SigmaArg,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Grid step, such as `1/2` or `0.25`.
        #[arg(long, default_value = "1/2")]
        grid: String,
        /// Largest timestamp.
        #[arg(long, default_value = "4")]
        horizon: String,
    },
    /// Size of a formula and of both reductions.
    Size {
        #[command(flatten)]
        formula: Source,
        #[command(flatten)]
        sigma: SigmaArg,
    },
    /// Build a separation formula and word pair and check its verdict.
    Vectors {
        /// One of `i`, `ii`, `iii`.
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value = "1/10")]
        delta: String,
        #[arg(long, default_value = "1/20")]
        kappa: String,
        #[arg(long, default_value = "1/100")]
        epsilon: String,
        /// Distinguished index; defaults to the ceiling of n/2.
        #[arg(long)]
        index: Option<usize>,
        /// Directory for `formula.mtl`, `w1.word` and `w2.word`.
        #[arg(long, short = 'o')]
        out: Option<PathBuf>,
    },
}

/// A formula given as a file path or inline.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Path of the input file, or `-` for standard input.
    pub path: Option<PathBuf>,
    /// Inline input text instead of a file.
    #[arg(long, short = 'e')]
    pub expr: Option<String>,
}

#[derive(Debug, Args)]
pub struct SigmaArg {
    /// Comma-separated base alphabet; defaults to the propositions of the formula.
    #[arg(long, value_delimiter = ',')]
    pub sigma: Option<Vec<String>>,
}
