//! `hookchar`: character tables, tableau counts, the trace oracle and identity sweeps.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails (or an unexpected
//! runtime error occurs), 2 for usage errors, 3 when a resource ceiling stops the run.

mod commands;
mod range;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hookchar_core::{Error, Limits, Partition};

use crate::range::IntRange;

#[derive(Parser, Debug)]
#[command(
    name = "hookchar",
    version,
    about = "Exact S_n characters and hook character identities"
)]
struct Cli {
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Latex,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the character table of S_n.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Persistent character-table cache file.
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Check the hook identities over a grid of (n, k, l).
    Verify {
        /// `a..b` (inclusive) or a single value.
        #[arg(long)]
        n: IntRange,
        #[arg(long)]
        k: IntRange,
        #[arg(long)]
        l: IntRange,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Attach the brute-force tensor trace where (k+l)^n is within the ceiling.
        #[arg(long)]
        with_oracle: bool,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Count (k,l)-semistandard tableaux of a shape (k-semistandard when l = 0).
    Count {
        /// Comma-separated weakly decreasing parts, e.g. `3,1,1`.
        #[arg(long, value_parser = parse_shape, allow_hyphen_values = true)]
        shape: Partition,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
        /// List the tableaux instead of only counting them.
        #[arg(long)]
        list: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Trace of the signed place permutation action on (V0+V1)^{⊗n}, against the closed form.
    Trace {
        /// Cycle type; every μ ⊢ n is used when omitted.
        #[arg(long, alias = "shape", value_parser = parse_shape, conflicts_with = "n")]
        mu: Option<Partition>,
        #[arg(long, required_unless_present = "mu")]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// List the partitions of n, optionally restricted to the (k,l) hook.
    Partitions {
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "l")]
        k: Option<usize>,
        #[arg(long, requires = "k")]
        l: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Inspect or fill a character-table cache file.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand, Debug)]
enum CacheAction {
    /// Show which tables the file holds.
    Info {
        #[arg(long)]
        cache: PathBuf,
    },
    /// Compute and store the tables for a range of n.
    Warm {
        #[arg(long)]
        cache: PathBuf,
        #[arg(long)]
        n: IntRange,
    },
    /// Remove every table from the file.
    Clear {
        #[arg(long)]
        cache: PathBuf,
    },
}

fn parse_shape(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Outcome of a command that ran to completion.
pub enum Outcome {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("the global pool is configured once");
    }
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Table { n, format, cache } => {
            commands::table(n, format, cache.as_deref(), &limits)
        }
        Command::Verify {
            n,
            k,
            l,
            format,
            with_oracle,
            cache,
        } => commands::verify(n, k, l, format, with_oracle, cache.as_deref(), &limits),
        Command::Count {
            shape,
            k,
            l,
            list,
            format,
        } => commands::count(&shape, k, l, list, format, &limits),
        Command::Trace { mu, n, k, l } => commands::trace(mu, n, k, l, &limits),
        Command::Partitions { n, k, l, format } => {
            commands::partitions(n, k.zip(l), format, &limits)
        }
        Command::Cache { action } => match action {
            CacheAction::Info { cache } => commands::cache_info(&cache),
            CacheAction::Warm { cache, n } => commands::cache_warm(&cache, n, &limits),
            CacheAction::Clear { cache } => commands::cache_clear(&cache),
        },
    };
    match result {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceLimit { .. } => 3,
        Error::InvalidPartition { .. }
        | Error::InvalidArgument(_)
        | Error::Config(_)
        | Error::LetterOutOfRange { .. }
        | Error::SizeMismatch { .. }
        | Error::InvalidPermutation(_) => 2,
        _ => 1,
    }
}
