use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "warpcheck", version, about = "Curvature, stability and Yamabe checks for warped product metrics")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Jet truncation order (at least 12).
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u32).range(12..))]
    pub order: u32,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Tolerance override; positive.
    #[arg(long, global = true, value_parser = positive_f64)]
    pub tol: Option<f64>,
    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = 20_240_611)]
    pub seed: u64,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Leaf quantities of a metric file on a t-grid, jet summaries and identity residuals.
    Report(ReportArgs),
    /// Run every built-in catalog claim.
    VerifyPaper(VerifyArgs),
    /// Evaluate the stability chain on a JSON scenario.
    ChainCheck(FileArg),
    /// Check the integro-differential inequality on JSON data.
    Gronwall(FileArg),
    /// Minimize the discrete Yamabe quotient on a periodic cube.
    YamabeMin(YamabeArgs),
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// TOML metric file.
    pub file: PathBuf,
    /// Number of t samples on [-epsilon, epsilon] (at least 101).
    #[arg(long, default_value_t = 1001, value_parser = clap::value_parser!(u32).range(101..))]
    pub grid: u32,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Restrict to one family (case1, torus3, ...) or one entry name.
    #[arg(long)]
    pub only: Option<String>,
    #[arg(long)]
    pub n: Option<i64>,
    #[arg(long)]
    pub k: Option<i64>,
    #[arg(long)]
    pub m: Option<i64>,
    /// Samples per window check (at least 101).
    #[arg(long, default_value_t = 1001, value_parser = clap::value_parser!(u32).range(101..))]
    pub grid: u32,
    /// Corrupt one expected value before verifying (negative testing).
    #[arg(long, hide = true, num_args = 0..=1, default_missing_value = "")]
    pub inject_fault: Option<String>,
}

#[derive(Args, Debug)]
pub struct FileArg {
    /// JSON input file.
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct YamabeArgs {
    /// Points per axis of the periodic cube.
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..=128))]
    pub grid: u32,
    /// Constant scalar curvature of the background.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub background: f64,
    /// Total volume of the cube; defaults to (2 pi)^3.
    #[arg(long, value_parser = positive_f64)]
    pub volume: Option<f64>,
    #[arg(long, default_value_t = 50_000)]
    pub max_iters: usize,
    /// Write the minimizing field as CSV (i,j,k,f).
    #[arg(long)]
    pub dump_field: Option<PathBuf>,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("must be positive and finite, got {v}"))
    }
}
