use std::path::PathBuf;

use clap::{Args as ClapArgs, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "weyl-pinch",
    version,
    about = "Estimate the Weyl pinching constant C(n) and check curvature tables"
)]
pub struct Args {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multi-start ascent of Q/|W|^3 over unit algebraic Weyl tensors
    Optimize(OptimizeArgs),
    /// Verify, rebuild or export the curvature tables
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Check the Weyl tensor of the squashed CP^3
    #[command(name = "squashed-cp3")]
    SquashedCp3(OutArgs),
    /// Evaluate the Yamabe-type bounds on every catalog row
    Bounds(OutArgs),
    /// Compare the analytic gradient of Q with central differences
    Gradcheck(GradcheckArgs),
    /// Sweep the S^2 x S^4 family and locate where S/|W| crosses sqrt(10)
    Counterexample(CounterexampleArgs),
    /// Write the iterate log of one ascent run as CSV
    #[command(name = "convergence-log")]
    ConvergenceLog(ConvergenceArgs),
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    /// Check the exact identities on every row
    Verify(OutArgs),
    /// Rebuild sphere and CP^p product rows from their curvature tensors
    Construct(OutArgs),
    /// Write every row with exact and floating-point values
    Export {
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, ClapArgs)]
pub struct OutArgs {
    /// Write the JSON result envelope here ("-" for stdout)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, ClapArgs)]
pub struct OptimizeArgs {
    /// Dimension n
    #[arg(long, value_parser = clap::value_parser!(u32).range(4..=9))]
    pub dim: u32,
    /// Number of random starts
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    pub starts: u64,
    /// Master seed; run i uses seed + i
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Gradient-norm tolerance
    #[arg(long, default_value_t = 1e-10, value_parser = positive)]
    pub tol: f64,
    /// Iteration budget per run
    #[arg(long, default_value_t = 10_000)]
    pub max_iter: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, ClapArgs)]
pub struct GradcheckArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(4..=9))]
    pub dim: u32,
    /// Number of random Weyl tensors
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Sample i uses seed + i
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Corrupt the analytic gradient (negative control)
    #[arg(long, hide = true)]
    pub sabotage: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, ClapArgs)]
pub struct CounterexampleArgs {
    #[arg(long, default_value_t = 0.1, value_parser = positive)]
    pub beta_min: f64,
    #[arg(long, default_value_t = 2.0, value_parser = positive)]
    pub beta_max: f64,
    /// Number of sweep points, endpoints included
    #[arg(long, default_value_t = 201, value_parser = clap::value_parser!(u64).range(2..))]
    pub steps: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, ClapArgs)]
pub struct ConvergenceArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(4..=9))]
    pub dim: u32,
    /// Seed of the random start
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Reference value for e_k = |ratio_k - target| (default sqrt(6)/4)
    #[arg(long, value_parser = finite)]
    pub target: Option<f64>,
    #[arg(long, default_value_t = 1e-10, value_parser = positive)]
    pub tol: f64,
    #[arg(long, default_value_t = 10_000)]
    pub max_iter: usize,
    /// CSV destination; stdout when omitted
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn finite(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        Ok(v) => Err(format!("{v} is not finite")),
        Err(e) => Err(e.to_string()),
    }
}

fn positive(s: &str) -> Result<f64, String> {
    match finite(s)? {
        v if v > 0.0 => Ok(v),
        v => Err(format!("{v} is not positive")),
    }
}
