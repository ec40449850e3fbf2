//! Batch interface: products, identity verification over (k, n) grids, and
//! MZV evaluation. The `mzv` binary is a thin argument parser over this
//! module.
//!
//! Output is deterministic: grid cells may be verified in parallel but
//! reports are emitted sorted by (identity, k, n), so identical configs give
//! byte-identical output.

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::identities::{verify_with_engine, Engine, IdentityId, IdentityReport};
use crate::numerics::{self, NumericError};
use crate::oracle;
use crate::shuffle::transported_shuffle_words;
use crate::stuffle::stuffle;
use crate::words::{compositions_of, Composition, WordError};
use crate::DomainError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid configuration: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for OutputFormat {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(CliError::Config(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Stuffle,
    Shuffle,
}

impl std::str::FromStr for ProductKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "stuffle" => Ok(ProductKind::Stuffle),
            "shuffle" => Ok(ProductKind::Shuffle),
            other => Err(CliError::Config(format!("unknown product kind {other:?}"))),
        }
    }
}

/// Configuration of one verification run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    /// `None` verifies every identity.
    pub identity: Option<IdentityId>,
    pub k_min: u32,
    pub k_max: u32,
    pub n_min: u32,
    pub n_max: u32,
    pub tol: f64,
    pub format: OutputFormat,
    /// Route products through the brute-force enumerators.
    pub oracle: bool,
    /// Parallelism degree; 0 means the rayon default.
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            identity: None,
            k_min: 2,
            k_max: 5,
            n_min: 2,
            n_max: 12,
            tol: 1e-6,
            format: OutputFormat::Text,
            oracle: false,
            jobs: 0,
        }
    }
}

impl RunConfig {
    fn validate(&self) -> Result<(), CliError> {
        if self.k_min > self.k_max || self.n_min > self.n_max {
            return Err(CliError::Config("empty k or n range".into()));
        }
        if self.n_max > crate::words::max_weight() {
            return Err(CliError::Config(format!(
                "n-max {} exceeds the weight ceiling {} (set MZV_MAX_WEIGHT to raise)",
                self.n_max,
                crate::words::max_weight()
            )));
        }
        if !(self.tol > 0.0) {
            return Err(CliError::Config("tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// Smallest valid n for an identity at depth k, or `None` when the identity
/// is indexed by weight alone.
fn min_n_for(id: IdentityId, k: u32) -> Option<u32> {
    match id {
        IdentityId::Thm31 | IdentityId::Thm25 | IdentityId::Lem42a | IdentityId::Lem42b => Some(k),
        IdentityId::Thm32 | IdentityId::Thm26 | IdentityId::WSFReduction => Some(k + 1),
        IdentityId::RotaBaxter => None,
        IdentityId::EulerDecomp | IdentityId::EDSClosure => None,
    }
}

fn grid_cells(cfg: &RunConfig) -> Vec<(IdentityId, u32, u32)> {
    let ids: Vec<IdentityId> = match cfg.identity {
        Some(id) => vec![id],
        None => IdentityId::ALL.to_vec(),
    };
    let mut cells = Vec::new();
    for id in ids {
        if id.uses_k() {
            for k in cfg.k_min.max(2)..=cfg.k_max {
                let lo = min_n_for(id, k).expect("k-indexed identity");
                for n in cfg.n_min.max(lo)..=cfg.n_max {
                    cells.push((id, k, n));
                }
            }
        } else {
            let lo = match id {
                IdentityId::RotaBaxter => 1,
                _ => 2,
            };
            for n in cfg.n_min.max(lo)..=cfg.n_max {
                cells.push((id, 0, n));
            }
        }
    }
    cells
}

fn emit(report: &IdentityReport, format: OutputFormat, out: &mut impl Write) -> Result<(), CliError> {
    match format {
        OutputFormat::Text => {
            let status = if report.verified() { "verified" } else { "FAILED" };
            if report.identity.uses_k() {
                writeln!(
                    out,
                    "{} k={} n={} {status}",
                    report.identity, report.k, report.n
                )?;
            } else {
                writeln!(out, "{} n={} {status}", report.identity, report.n)?;
            }
            if !report.verified() {
                writeln!(out, "  discrepancy: {}", report.discrepancy)?;
            }
        }
        OutputFormat::Json => {
            writeln!(out, "{}", serde_json::to_string(report).expect("serializable"))?;
        }
        OutputFormat::Csv => {
            let status = if report.verified() { "verified" } else { "failed" };
            writeln!(
                out,
                "{},{},{},{},{}",
                report.identity,
                report.k,
                report.n,
                status,
                report.discrepancy
            )?;
        }
    }
    Ok(())
}

/// Run a verification grid. Returns `true` when every cell verified.
pub fn run_verify(cfg: &RunConfig, out: &mut impl Write) -> Result<bool, CliError> {
    cfg.validate()?;
    let cells = grid_cells(cfg);
    if cells.is_empty() {
        eprintln!("warning: the configured ranges produce an empty grid");
        return Ok(true);
    }
    let engine = if cfg.oracle {
        Engine::BruteForce
    } else {
        Engine::Recursive
    };
    let run = || -> Vec<Result<IdentityReport, DomainError>> {
        cells
            .par_iter()
            .map(|&(id, k, n)| verify_with_engine(id, k, n, engine))
            .collect()
    };
    let mut results = if cfg.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| CliError::Config(e.to_string()))?
            .install(run)
    } else {
        run()
    };
    // cells are generated sorted per identity; restore the global order
    let mut paired: Vec<_> = cells.iter().zip(results.drain(..)).collect();
    paired.sort_by_key(|((id, k, n), _)| (*id, *k, *n));
    if cfg.format == OutputFormat::Csv {
        writeln!(out, "identity,k,n,status,discrepancy")?;
    }
    let mut all_ok = true;
    for (_, result) in paired {
        let report = result?;
        all_ok &= report.verified();
        emit(&report, cfg.format, out)?;
    }
    Ok(all_ok)
}

/// Compute one product from textual word inputs, canonically serialized.
pub fn run_product(
    kind: ProductKind,
    u: &str,
    v: &str,
    use_oracle: bool,
) -> Result<String, CliError> {
    let u: Composition = u.parse()?;
    let v: Composition = v.parse()?;
    let result = match (kind, use_oracle) {
        (ProductKind::Stuffle, false) => stuffle(&u, &v),
        (ProductKind::Stuffle, true) => oracle::stuffle_brute_force(&u, &v),
        (ProductKind::Shuffle, false) => transported_shuffle_words(&u, &v),
        (ProductKind::Shuffle, true) => oracle::transported_shuffle_brute_force(&u, &v),
    };
    Ok(result.to_string())
}

/// Evaluate one MZV, rendered with its error bound.
pub fn run_eval(s: &str, tol: f64) -> Result<String, CliError> {
    let c: Composition = s.parse()?;
    let v = numerics::mzv(&c, tol)?;
    let digits = (-tol.log10()).ceil().max(1.0) as u32 + 2;
    Ok(format!("{} = {}  (err <= {:.2e})", c, v.decimal(digits), v.err()))
}

/// Write oracle-generated golden files: every stuffle and transported
/// shuffle of composition pairs up to the given total weight, one line per
/// pair, `u * v = expansion`.
pub fn dump_golden(dir: &Path, max_total_weight: u32) -> Result<(), CliError> {
    std::fs::create_dir_all(dir)?;
    let mut pairs = Vec::new();
    for wu in 1..=max_total_weight - 1 {
        for wv in 1..=max_total_weight - wu {
            for du in 1..=wu {
                for dv in 1..=wv {
                    for u in compositions_of(wu, du, false)? {
                        for v in compositions_of(wv, dv, false)? {
                            if u <= v {
                                pairs.push((u.clone(), v));
                            }
                        }
                    }
                }
            }
        }
    }
    pairs.sort();
    pairs.dedup();
    let mut stuffle_lines = String::new();
    let mut shuffle_lines = String::new();
    for (u, v) in &pairs {
        stuffle_lines.push_str(&format!(
            "{u} * {v} = {}\n",
            oracle::stuffle_brute_force(u, v)
        ));
        shuffle_lines.push_str(&format!(
            "{u} * {v} = {}\n",
            oracle::transported_shuffle_brute_force(u, v)
        ));
    }
    std::fs::write(dir.join(format!("stuffle_weight_le_{max_total_weight}.txt")), stuffle_lines)?;
    std::fs::write(
        dir.join(format!("shuffle_weight_le_{max_total_weight}.txt")),
        shuffle_lines,
    )?;
    Ok(())
}
