use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::AppError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Adaptive quadrature of I
    Oracle,
    /// Coefficient table: both a_k routes, S_k, w_k, I_k, partial sums
    Coeffs,
    /// Partial sums of the series and their ratio to the quadrature value
    Series,
    /// Closed forms and direct sums of σ₁, σ₂, σ₃
    Sigmas,
    /// Least-squares fit S_k ≈ a/k + b/k² + c/k³
    Fit,
    /// Head sum plus fitted tail remainder
    Accelerate,
    /// Run every acceptance check; nonzero exit on failure
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    Csv,
    Json,
    #[default]
    Text,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct Options {
    /// Highest series order computed
    #[arg(long, global = true, default_value_t = 30)]
    pub k_max: usize,
    /// Terms summed directly before the tail model takes over
    #[arg(long, global = true, default_value_t = 10)]
    pub k_head: usize,
    /// First k of the tail fit
    #[arg(long, global = true, default_value_t = 10)]
    pub fit_lo: usize,
    /// Last k of the tail fit
    #[arg(long, global = true, default_value_t = 30)]
    pub fit_hi: usize,
    /// Absolute quadrature tolerance
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write output here instead of stdout
    #[arg(long = "out", global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Use the published (a, b, c) = (0.751653834, 2.25325549, −6.815672901)
    /// instead of the fitted tail
    #[arg(long = "use-paper-fit", global = true)]
    pub use_published_fit: bool,
}

#[derive(Debug, Parser)]
#[command(name = "airylog", version, about = "Logarithmic Airy integral: quadrature, Bell-polynomial series and tail acceleration")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub k_max: usize,
    pub k_head: usize,
    pub fit_lo: usize,
    pub fit_hi: usize,
    pub tol: f64,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
    pub use_published_fit: bool,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            k_max: 30,
            k_head: 10,
            fit_lo: 10,
            fit_hi: 30,
            tol: 1e-10,
            output_format: OutputFormat::Text,
            output_path: None,
            use_published_fit: false,
        }
    }

    pub fn from_cli(cli: Cli) -> Result<Self, AppError> {
        let o = cli.options;
        let cfg = RunConfig {
            command: cli.command,
            k_max: o.k_max,
            k_head: o.k_head,
            fit_lo: o.fit_lo,
            fit_hi: o.fit_hi,
            tol: o.tol,
            output_format: o.format,
            output_path: o.out,
            use_published_fit: o.use_published_fit,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Range checks. The head/fit ordering only applies to commands that
    /// use the tail fit, so `coeffs --k-max 1` stays valid.
    pub fn validate(&self) -> Result<(), AppError> {
        let usage = |m: &str| Err(AppError::Usage(m.to_string()));
        if self.k_max == 0 || self.k_max > airylog_core::K_MAX_LIMIT {
            return usage("--k-max must be in 1..=60");
        }
        if !(1e-12..=1e-4).contains(&self.tol) {
            return usage("--tol must be in [1e-12, 1e-4]");
        }
        match self.command {
            Command::Fit | Command::Accelerate | Command::Verify => {
                if !(1 <= self.k_head && self.k_head <= self.fit_lo && self.fit_lo <= self.fit_hi && self.fit_hi <= self.k_max) {
                    return usage("need 1 ≤ k_head ≤ fit_lo ≤ fit_hi ≤ k_max");
                }
                if self.fit_hi - self.fit_lo < 3 {
                    return usage("fit range needs at least four points");
                }
            }
            Command::Series => {
                if self.k_head == 0 || self.k_head > self.k_max {
                    return usage("need 1 ≤ k_head ≤ k_max");
                }
            }
            Command::Oracle | Command::Coeffs | Command::Sigmas => {}
        }
        Ok(())
    }
}
