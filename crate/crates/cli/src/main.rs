mod cache;
mod enumerate;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use carlitz_core::asymptotics::{self, AsymptoticTarget};
use carlitz_core::check;
use carlitz_core::closed_form::GfTarget;
use carlitz_core::oracle::Mutation;
use carlitz_core::poly::{Class, DEFAULT_SAFETY_BOUND};

use cache::Cache;

#[derive(Parser, Debug)]
#[command(
    name = "carlitz",
    version,
    about = "Exact enumeration of column-convex and convex Carlitz polyominoes"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0, global = true)]
    threads: usize,

    /// Cache directory; overrides CARLITZ_CACHE_DIR.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    /// Column-convex.
    Cc,
    Convex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MutationArg {
    GluingWeight,
    BottomLevel,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count polyominoes by half-perimeter by exhaustive generation.
    Enumerate {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Keep only Carlitz polyominoes.
        #[arg(long)]
        carlitz: bool,
        /// Largest half-perimeter.
        #[arg(short = 'n', long = "bound")]
        n: u32,
        /// Also report the (B, U) level polynomial of each size.
        #[arg(long)]
        stats: bool,
        /// Raise the refusal threshold for `-n`.
        #[arg(long, default_value_t = DEFAULT_SAFETY_BOUND)]
        safety_bound: u32,
    },
    /// Expand a generating function.
    Series {
        #[arg(long)]
        target: String,
        #[arg(long)]
        order: u32,
        /// Skip the cache.
        #[arg(long)]
        no_cache: bool,
    },
    /// Brute force vs recurrence oracle vs closed forms.
    Check {
        #[arg(short = 'n', long = "bound", default_value_t = 10)]
        n: u32,
        /// Deliberately corrupt the oracle.
        #[arg(long, value_enum)]
        mutate: Option<MutationArg>,
    },
    /// Compare asymptotic formulas with exact coefficients.
    Asympt {
        #[arg(long)]
        target: String,
        /// Comma-separated indices for a convergence report.
        #[arg(long, value_delimiter = ',')]
        checkpoints: Vec<u32>,
        /// Single index.
        #[arg(short = 'n')]
        n: Option<u32>,
        /// Significant digits of the prediction.
        #[arg(long, default_value_t = asymptotics::DEFAULT_DIGITS)]
        digits: u32,
        /// Also report a(n+1)/a(n) minus the growth base at this index.
        #[arg(long)]
        growth: Option<u32>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` signals a failed check.
fn run(cli: Cli) -> Result<bool> {
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let out = match cli.command {
        Command::Enumerate {
            class,
            carlitz,
            n,
            stats,
            safety_bound,
        } => {
            let class = match class {
                ClassArg::Cc => Class::ColumnConvex,
                ClassArg::Convex => Class::Convex,
            };
            let table = enumerate::count_parallel(n, class, carlitz, safety_bound)?;
            render::count_table(&table, class, carlitz, stats, cli.format)?
        }
        Command::Series {
            target,
            order,
            no_cache,
        } => {
            let target: GfTarget = target.parse()?;
            let cache = if no_cache {
                None
            } else {
                Cache::from_env(cli.cache_dir)
            };
            let payload = match cache.as_ref().and_then(|c| c.load(target, order)) {
                Some(hit) => hit,
                None => {
                    let fresh = render::payload(&target.evaluate(order)?)?;
                    if let Some(c) = &cache {
                        c.store(target, order, &fresh)?;
                    }
                    fresh
                }
            };
            render::series(&payload, cli.format)?
        }
        Command::Check { n, mutate } => {
            if cli.format == Format::Csv || cli.format == Format::Bfile {
                bail!("check supports text and json output");
            }
            let mutation = mutate.map(|m| match m {
                MutationArg::GluingWeight => Mutation::GluingWeight,
                MutationArg::BottomLevel => Mutation::BottomLevelOffByOne,
            });
            let report = check::run_suite(n, mutation)?;
            print!("{}", render::check_report(&report, cli.format)?);
            return Ok(report.passed());
        }
        Command::Asympt {
            target,
            checkpoints,
            n,
            digits,
            growth,
        } => {
            let target: AsymptoticTarget = target.parse()?;
            match (n, checkpoints.is_empty()) {
                (Some(n), true) => {
                    let predicted = asymptotics::predict_with(target, n, digits)?;
                    render::prediction(target, n, &predicted, digits, cli.format)?
                }
                (None, false) => {
                    let report = asymptotics::convergence_report(target, &checkpoints)?;
                    let growth = growth
                        .map(|g| asymptotics::growth_deviation(target, g).map(|d| (g, d)))
                        .transpose()?;
                    render::convergence(&report, growth.as_ref(), digits, cli.format)?
                }
                _ => bail!("give exactly one of -n and --checkpoints"),
            }
        }
    };
    print!("{out}");
    Ok(true)
}
