//! `hyparr`: exact invariants and verification suites for integer
//! hyperplane arrangements.
//!
//! Exit codes: 0 success, 1 a suite failed or a computation was rejected,
//! 2 usage or input error.

mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "hyparr", version, about = "Exact invariants of integer hyperplane arrangements")]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimensions, classification flags and kernel basis.
    Info(FileArg),
    /// Lattice of flats with ranks and Möbius values.
    Flats(FileArg),
    /// Circuits with primitive sign vectors.
    Circuits(FileArg),
    /// Tutte polynomial as a sorted term list.
    Tutte {
        #[command(flatten)]
        file: FileArg,
        /// Use the subset-sum expansion instead of deletion-contraction.
        #[arg(long)]
        whitney: bool,
    },
    /// Characteristic polynomial and number of regions.
    Charpoly(FileArg),
    /// Smooth and intersection cohomology Poincaré polynomials with residuals.
    Betti(FileArg),
    /// Brute-force point count over F_q.
    Count(CountArgs),
    /// Gröbner basis of the circuit ideal.
    Groebner(GroebnerArgs),
    /// Run verification suites over the fixture catalog and any given files.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FileArg {
    /// Arrangement JSON file.
    file: std::path::PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CountWhat {
    Complement,
    LocallyFree,
    Fiber,
    Smooth,
    Stratum,
    Hypertoric,
}

#[derive(Args)]
pub struct CountArgs {
    file: std::path::PathBuf,
    /// Prime field size.
    #[arg(long)]
    q: u64,
    #[arg(long, value_enum)]
    what: CountWhat,
    /// Moment map level, in coordinates dual to the rows of the kernel
    /// basis (see `info`). Defaults to a regular value mod q for `smooth`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    lam: Option<Vec<i64>>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum OrderArg {
    Lex,
    #[value(alias = "graded-lex")]
    Grlex,
    #[value(alias = "graded-reverse-lex")]
    Grevlex,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum LinearForms {
    None,
    /// The d forms sum_i (a_i)_j e_i of the arrangement.
    Auto,
}

#[derive(Args)]
pub struct GroebnerArgs {
    file: std::path::PathBuf,
    #[arg(long, value_enum, default_value = "lex")]
    order: OrderArg,
    /// Variables from smallest to largest, 1-based; defaults to 1,2,...,n.
    #[arg(long, value_delimiter = ',')]
    sigma: Option<Vec<usize>>,
    /// Add e_i^2 for every i.
    #[arg(long)]
    squares: bool,
    #[arg(long, value_enum, default_value = "none")]
    linear_forms: LinearForms,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// krs, kl, decomposition, counts, ugb, hilbert or all.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Extra arrangement files or directories of `*.json` files.
    paths: Vec<std::path::PathBuf>,
    /// Include per-check wall-clock milliseconds.
    #[arg(long)]
    timings: bool,
    /// Skip the seeded random instances in the residual suites.
    #[arg(long)]
    no_random: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("hyparr: {e:#}");
        return ExitCode::from(2);
    }
    match commands::run(cli.command) {
        Ok((value, ok)) => {
            let text = if cli.pretty { serde_json::to_string_pretty(&value) } else { serde_json::to_string(&value) };
            let mut out = std::io::stdout().lock();
            // A closed pipe is not an error worth reporting.
            let _ = writeln!(out, "{}", text.expect("JSON values serialize"));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("hyparr: {e:#}");
            ExitCode::from(if e.is::<input::InputError>() { 2 } else { 1 })
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("HYPARR_THREADS") else { return Ok(()) };
    let threads: usize =
        raw.parse().map_err(|_| anyhow::anyhow!("HYPARR_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}
