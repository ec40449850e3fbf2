use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use mzv::cli::{self, OutputFormat, ProductKind, RunConfig};
use mzv::identities::IdentityId;

#[derive(Parser)]
#[command(name = "mzv", about = "Exact stuffle/shuffle algebra and MZV toolkit", version)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a stuffle or shuffle product of two composition words.
    Product {
        /// Product kind: stuffle or shuffle.
        #[arg(long, default_value = "stuffle")]
        kind: ProductKind,
        /// Use the brute-force enumeration oracle instead of the recursive
        /// implementation.
        #[arg(long)]
        oracle: bool,
        /// First word, e.g. "z(2,1)" or "2,1".
        u: String,
        /// Second word.
        v: String,
    },
    /// Verify identity families over a (k, n) grid. Exits 0 iff every cell
    /// verified.
    Verify {
        /// Identity name, or "all".
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long, default_value_t = 2)]
        k_min: u32,
        #[arg(long, default_value_t = 5)]
        k_max: u32,
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        /// Tolerance carried in the run configuration (numeric checks).
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Output format: text, json (NDJSON, one report per line), or csv.
        #[arg(long, default_value = "text")]
        format: OutputFormat,
        /// Route all products through the brute-force oracles.
        #[arg(long)]
        oracle: bool,
        /// Worker threads; 0 picks a default.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write oracle-generated golden product files into this directory
        /// and exit.
        #[arg(long)]
        dump_golden: Option<PathBuf>,
    },
    /// Evaluate an admissible MZV numerically.
    Eval {
        /// Composition, e.g. "z(2,1)".
        s: String,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

fn run() -> Result<bool, cli::CliError> {
    match Args::parse().command {
        Command::Product { kind, oracle, u, v } => {
            println!("{}", cli::run_product(kind, &u, &v, oracle)?);
            Ok(true)
        }
        Command::Verify {
            identity,
            k_min,
            k_max,
            n_min,
            n_max,
            tol,
            format,
            oracle,
            jobs,
            dump_golden,
        } => {
            if let Some(dir) = dump_golden {
                cli::dump_golden(&dir, 6)?;
                return Ok(true);
            }
            let identity = if identity.eq_ignore_ascii_case("all") {
                None
            } else {
                Some(identity.parse::<IdentityId>()?)
            };
            let cfg = RunConfig {
                identity,
                k_min,
                k_max,
                n_min,
                n_max,
                tol,
                format,
                oracle,
                jobs,
            };
            let stdout = std::io::stdout();
            let mut out = stdout.lock();
            let ok = cli::run_verify(&cfg, &mut out)?;
            out.flush()?;
            Ok(ok)
        }
        Command::Eval { s, tol } => {
            println!("{}", cli::run_eval(&s, tol)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
