use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use minabc_search::SweepMethod;

#[derive(Debug, Parser)]
#[command(name = "minabc", version, about = "Search, analyze and bound trees of minimum ABC index")]
pub struct Cli {
    /// Machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for the searches (default: available cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Recorded in JSON output; every current command is deterministic.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Absolute tolerance for the golden-constant comparison.
    #[arg(long, global = true)]
    pub tolerance: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum ABC index per order.
    Search(SearchArgs),
    /// Branch census and theorem checks for trees given in graph6.
    Analyze(AnalyzeArgs),
    /// The catalog of closed-form bounds.
    Bounds {
        #[command(subcommand)]
        command: BoundsCommand,
    },
    /// Theorem checks on the computed minima of a range of orders.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RangeArgs {
    /// A single order.
    #[arg(long, conflicts_with_all = ["from", "to"])]
    pub n: Option<usize>,
    #[arg(long, requires = "to")]
    pub from: Option<usize>,
    #[arg(long, requires = "from")]
    pub to: Option<usize>,
}

impl RangeArgs {
    pub fn bounds(&self) -> Option<(usize, usize)> {
        match (self.n, self.from, self.to) {
            (Some(n), _, _) => Some((n, n)),
            (None, Some(a), Some(b)) => Some((a, b)),
            _ => None,
        }
    }
}

fn parse_method(s: &str) -> Result<SweepMethod, String> {
    s.parse()
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub range: RangeArgs,
    /// brute, greedy-seq or both.
    #[arg(long, value_parser = parse_method, default_value = "greedy-seq")]
    pub method: SweepMethod,
    /// Degree-sequence filters: none, all, or a comma list of names.
    #[arg(long, default_value = "all")]
    pub filters: String,
    /// JSON-lines result store; orders already present are not recomputed.
    #[arg(long)]
    pub store: Option<PathBuf>,
    /// Recompute orders that are already in the store.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct AnalyzeArgs {
    /// A graph6 string, or a file with one graph6 string per line.
    pub input: String,
    /// Print Graphviz DOT instead of the report.
    #[arg(long)]
    pub dot: bool,
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// Every registered expression with its parameter domains.
    List,
    /// Full definition of one expression.
    Show { id: String },
    /// Evaluate an expression, e.g. `eval change-90 du=7` or `dw=inf`.
    Eval {
        id: String,
        /// name=value pairs; `inf` asks for the limit.
        assignments: Vec<String>,
    },
    /// Check every printed constant against the catalog.
    Golden {
        /// CSV instead of a table.
        #[arg(long)]
        csv: bool,
    },
    /// Degree thresholds and forbidden (k1, k2) tables.
    Thresholds,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub range: RangeArgs,
    /// How the minima are computed.
    #[arg(long, value_parser = parse_method, default_value = "both")]
    pub method: SweepMethod,
    #[arg(long, default_value = "all")]
    pub filters: String,
    #[arg(long)]
    pub store: Option<PathBuf>,
}
