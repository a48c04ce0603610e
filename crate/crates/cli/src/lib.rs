//! Command-line front end for `popuc-core`.

pub mod commands;
pub mod error;
pub mod report;
pub mod source;
pub mod tables;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use popuc_core::bounds::Method;

pub use error::{exit, CliError, CliResult};
pub use report::{Format, Report};

#[derive(Debug, Parser)]
#[command(
    name = "popuc",
    version,
    about = "Zero bounds and support arcs for para-orthogonal polynomials on the unit circle"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// JSON file with "alpha" ([re, im] pairs), a "family" object, or "c"/"d" arrays.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// geronimus | alternating | lambda-eta
    #[arg(long, conflicts_with = "input")]
    pub family: Option<String>,
    /// Family parameters, e.g. `lambda=1,eta=1` or `re=-0.5,im=0,rotated=true`.
    #[arg(long, requires = "family")]
    pub params: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct DegreeArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated degrees.
    #[arg(long, value_delimiter = ',', conflicts_with = "n")]
    pub n_list: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Args)]
pub struct ScalingArgs {
    /// auto | trivial | constant=<q> | ismail-li | legendre | family-default | custom
    #[arg(long, default_value = "auto")]
    pub q_mode: String,
    /// Scaling values q_2, q_3, ... as a JSON array or whitespace/comma separated numbers.
    #[arg(long)]
    pub q_file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub output: Format,
    /// Render angles in degrees (CSV only; JSON stays in radians).
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reproduce the extreme-zero tables (1, 2, 3; all when omitted).
    Tables {
        which: Option<u8>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Enclosure (A_N, B_N) of the zeros of W_N.
    Bounds {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        degrees: DegreeArgs,
        #[command(flatten)]
        scaling: ScalingArgs,
        #[arg(long, default_value = "thm44")]
        method: Method,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// All zeros of W_N and the angles of the zeros of R_N.
    Zeros {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        degrees: DegreeArgs,
        /// Bisection width in x.
        #[arg(long, default_value_t = popuc_core::recurrence::DEFAULT_XTOL)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Closed arc containing the zeros up to degree N, with a stabilization flag.
    SupportArc {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        degrees: DegreeArgs,
        #[command(flatten)]
        scaling: ScalingArgs,
        #[arg(long, default_value = "thm44")]
        method: Method,
        /// Stabilization threshold over the last doubling of N.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Test whether the open arc (theta1, theta2) misses the support of the measure.
    Gap {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, allow_hyphen_values = true)]
        theta1: f64,
        #[arg(long, allow_hyphen_values = true)]
        theta2: f64,
        #[command(flatten)]
        degrees: DegreeArgs,
        /// Print the m_n trace instead of the summary.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// (c_n, d_{n+1}, g_n, tau_n) from Verblunsky coefficients, or the inverse for (c, d) input.
    Transform {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        degrees: DegreeArgs,
        /// Mass at z = 1 for the inverse map.
        #[arg(long)]
        t: Option<f64>,
        /// Map forward and back, reporting the residual.
        #[arg(long)]
        roundtrip: bool,
        #[arg(long, default_value_t = popuc_core::chainseq::DEFAULT_MAXIMAL_TOL)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Smallest admissible constant scaling for d_2, ..., d_N.
    ScalingThreshold {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        degrees: DegreeArgs,
        /// Constant to classify against the threshold.
        #[arg(long)]
        q: Option<f64>,
        /// Limit N -> infinity (named families only).
        #[arg(long)]
        infinite: bool,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

impl Command {
    pub fn format(&self) -> Format {
        match self {
            Command::Tables { out, .. }
            | Command::Bounds { out, .. }
            | Command::Zeros { out, .. }
            | Command::SupportArc { out, .. }
            | Command::Gap { out, .. }
            | Command::Transform { out, .. }
            | Command::ScalingThreshold { out, .. } => out.output,
        }
    }
}

/// Runs a parsed command and renders its output.
pub fn run(cli: &Cli) -> CliResult<String> {
    let report = commands::dispatch(&cli.command)?;
    Ok(report.render(cli.command.format()))
}
