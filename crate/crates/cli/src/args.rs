//! Command-line surface, declared with clap derive.
//!
//! Quaternions are written scalar-first everywhere: `w,x,y,z` stands for
//! `w + x·i + y·j + z·k`. The numeric defaults reproduce the reference
//! experiment, so `interp kli --p 0,0,0,1 --r 0.5,0.5,0.5,0.5` works with no
//! further flags.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Top-level CLI: interpolate rotations via the flow or SLERP.
#[derive(Debug, Parser)]
#[command(
    name = "interp",
    version,
    about = "Interpolate between 3-D rotations given as unit quaternions",
    after_help = "Quaternions are written w,x,y,z (scalar first). Exit codes: \
                  0 success, 2 invalid input or I/O failure, 3 interpolation \
                  failure (non-convergence or antipodal endpoints). Set \
                  INTERP_LOG=debug|info|quiet to control diagnostics."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integrate the interpolation flow from p toward r
    Kli(KliArgs),
    /// Sample classical SLERP from p to r
    Slerp(SlerpArgs),
    /// Run both methods and report how closely the flow tracks the SLERP arc
    Compare(CompareArgs),
}

/// Where the rotation pairs come from: one inline pair, or a CSV batch.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Start rotation, w,x,y,z
    #[arg(
        long,
        value_name = "W,X,Y,Z",
        requires = "r",
        conflicts_with = "pairs",
        allow_hyphen_values = true
    )]
    pub p: Option<String>,

    /// Target rotation, w,x,y,z
    #[arg(
        long,
        value_name = "W,X,Y,Z",
        requires = "p",
        conflicts_with = "pairs",
        allow_hyphen_values = true
    )]
    pub r: Option<String>,

    /// CSV file of pairs, one `pw,px,py,pz,rw,rx,ry,rz` line each
    /// (`#` comment lines and blank lines ignored); requires --out
    #[arg(long, value_name = "PATH")]
    pub pairs: Option<PathBuf>,
}

/// Numeric parameters of the flow.
#[derive(Debug, Args)]
pub struct FlowArgs {
    /// Convergence threshold on the residual ‖r − q‖
    #[arg(long, default_value_t = 1e-5, allow_negative_numbers = true)]
    pub epsilon: f64,

    /// Spacing of convergence checkpoints
    #[arg(long, default_value_t = 0.01, allow_negative_numbers = true)]
    pub delta: f64,

    /// Integrator step size (delta must be a multiple of it)
    #[arg(long = "step", default_value_t = 0.01, allow_negative_numbers = true)]
    pub step: f64,

    /// Give up when no checkpoint converged by this time
    #[arg(long = "t-max", default_value_t = 100.0, allow_negative_numbers = true)]
    pub t_max: f64,
}

/// Output destination and format.
#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    /// Output path (stdout when omitted; batch runs write stem_0, stem_1, …)
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Append the Hopf projection as extra columns hx,hy,hz
    #[arg(long)]
    pub hopf: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Comma-separated values with a header row
    Csv,
    /// One JSON document per curve
    Json,
}

#[derive(Debug, Args)]
pub struct KliArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[command(flatten)]
    pub flow: FlowArgs,

    /// Take the shorter arc: negate r when dot(p, r) < 0
    #[arg(long)]
    pub shortest: bool,

    /// Also write rotated unit-cube frames at these trajectory times
    /// (each a grid multiple of --step); requires --out
    #[arg(long, value_name = "T1,T2,...", value_delimiter = ',', num_args = 1..)]
    pub frames: Option<Vec<f64>>,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SlerpArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Number of uniformly spaced samples on t ∈ [0, 1]
    #[arg(long, default_value_t = 101)]
    pub samples: usize,

    /// Take the shorter arc: negate r when dot(p, r) < 0
    #[arg(long)]
    pub shortest: bool,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[command(flatten)]
    pub flow: FlowArgs,

    /// Number of SLERP samples for the reference curve
    #[arg(long, default_value_t = 101)]
    pub samples: usize,

    /// Take the shorter arc: negate r when dot(p, r) < 0 (both methods)
    #[arg(long)]
    pub shortest: bool,

    /// Output path for the comparison record(s) (stdout when omitted)
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}
