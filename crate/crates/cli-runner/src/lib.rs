//! The `minabc` command line: searches, structural analysis, the bound
//! catalog and theorem verification, with stable exit codes.
//!
//! Exit codes are 0 on success, 1 for usage or input errors and 2 when a
//! verification fails (methods disagree, a corrupt store, a failed golden
//! constant or an asserted theorem that does not hold).

mod args;
mod commands;

use std::io::Write;
use std::path::PathBuf;

use minabc_search::SearchError;
use thiserror::Error;

pub use args::{AnalyzeArgs, BoundsCommand, Cli, Command, RangeArgs, SearchArgs, VerifyArgs};
pub use commands::{degree_summary, parse_assignment};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("output error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => EXIT_MISMATCH,
            _ => EXIT_USAGE,
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Mismatch { .. } | SearchError::StoreCorrupt { .. } => CliError::Mismatch(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Settings shared by all commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub workers: usize,
    pub store: Option<PathBuf>,
    pub tolerance: f64,
    pub seed: u64,
    pub json: bool,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let workers = match cli.workers {
            Some(w) => w,
            None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        };
        let store = match &cli.command {
            Command::Search(a) => a.store.clone(),
            Command::Verify(a) => a.store.clone(),
            _ => None,
        };
        let cfg = RunConfig {
            workers,
            store,
            tolerance: cli.tolerance.unwrap_or(bound_catalog::GOLDEN_TOLERANCE),
            seed: cli.seed,
            json: cli.json,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.workers == 0 {
            return Err(CliError::Usage("--workers must be at least 1".into()));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(CliError::Usage("--tolerance must be a positive number".into()));
        }
        Ok(())
    }
}

/// Runs a parsed command line, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    match &cli.command {
        Command::Search(a) => commands::search(a, &cfg, out),
        Command::Analyze(a) => commands::analyze(a, &cfg, out),
        Command::Bounds { command } => commands::bounds(command, &cfg, out),
        Command::Verify(a) => commands::verify(a, &cfg, out),
    }
}
