//! `cobase`: group constructions, base probabilities, bounds and
//! verification suites from the command line.

mod commands;
mod config;
mod error;
mod records;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::Format;
use error::{CliError, CliResult};

#[derive(Parser)]
#[command(
    name = "cobase",
    version,
    about = "Base probabilities of linear groups over finite fields"
)]
struct Cli {
    /// Worker threads; 0 uses one per processor.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

/// Flags shared by the commands that take a run configuration.
#[derive(Args, Clone, Debug, Default)]
pub struct Overrides {
    /// Run configuration (TOML).
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    trials: Option<u64>,
    /// Tuple lengths: `2`, `1,2,3` or `1..4`.
    #[arg(long, value_parser = config::parse_c_arg)]
    c: Option<config::CArg>,
    #[arg(long)]
    enum_cap: Option<u64>,
    #[arg(long)]
    tuple_cap: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum Command {
    /// Order, coprimality, minimal supports and support spectra of a group.
    GroupInfo {
        #[command(flatten)]
        run: Overrides,
        /// Also write every element to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Base probability for each configured `c`.
    Pb {
        #[command(flatten)]
        run: Overrides,
    },
    /// Lower bounds: the full report for a configured group, or only the
    /// closed forms for `--q` and `--dim`.
    Bounds {
        #[command(flatten)]
        run: Overrides,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        dim: Option<u64>,
        /// Closed-form cases, e.g. `1,2c`.
        #[arg(long, value_delimiter = ',')]
        cases: Option<Vec<String>>,
        /// Maximal character ratio as `a/b`.
        #[arg(long)]
        mr: Option<String>,
    },
    /// Run the verification suites; exits 4 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        m_max: Option<usize>,
        #[arg(long)]
        table_max: Option<usize>,
        #[arg(long)]
        pairs: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        enum_cap: Option<u64>,
        #[arg(long)]
        tuple_cap: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn run(cli: Cli) -> CliResult<()> {
    if cli.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.workers)
            .build_global()
            .map_err(|e| CliError::Config(format!("worker pool: {e}")))?;
    }
    match cli.command {
        Command::GroupInfo { run, dump } => commands::group_info(&run, dump.as_deref()),
        Command::Pb { run } => commands::pb(&run),
        Command::Bounds {
            run,
            q,
            dim,
            cases,
            mr,
        } => commands::bounds(&run, q, dim, cases, mr),
        Command::Verify {
            suite,
            m_max,
            table_max,
            pairs,
            seed,
            enum_cap,
            tuple_cap,
            out,
            format,
        } => {
            let suite = suite
                .parse()
                .map_err(|e: cobase_core::Error| CliError::Config(e.to_string()))?;
            let mut opts = cobase_core::verify::VerifyOptions::default();
            if let Some(v) = m_max {
                opts.m_max = v;
            }
            if let Some(v) = table_max {
                opts.table_max = v;
            }
            if let Some(v) = pairs {
                opts.pairs = v;
            }
            if let Some(v) = seed {
                opts.seed = v;
            }
            if let Some(v) = enum_cap {
                opts.enum_cap = v as usize;
            }
            if let Some(v) = tuple_cap {
                opts.tuple_cap = v as u128;
            }
            commands::verify(suite, &opts, out.as_deref(), format)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("cobase: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
