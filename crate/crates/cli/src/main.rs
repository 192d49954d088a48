//! `wwlab` command-line driver.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

/// Default directory for artifacts when `--out` is not given.
pub const OUT_ENV: &str = "WWLAB_OUT";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid dims: {0}")]
    Dims(String),
    #[error(transparent)]
    Core(#[from] wwlab::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// Exit status: 2 usage (including unknown subcommands, reported by
    /// clap), 3 invalid dims, 4 W too deep for the canonical path, 1 other.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Dims(_) => 3,
            CliError::Core(wwlab::Error::Dimension { .. } | wwlab::Error::Size(_)) => 3,
            CliError::Core(wwlab::Error::CannotOpenLoop { .. }) => 4,
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "wwlab", version, about = "Stabilizer-code lab: 3d3f Walker-Wang, toric codes and the paramagnet bulk")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Model: toric2d, toric3d, 3d3f or parabulk.
    #[arg(long, default_value = "3d3f")]
    pub model: String,
    /// Side lengths L_x,L_y[,L_z]; y is the open direction of the slab.
    #[arg(long)]
    pub dims: Option<String>,
    /// Depth of the symmetry-enforced region from y = 0: an integer or "full".
    #[arg(long = "W", default_value = "0")]
    pub w: String,
    /// Symmetry family: vertex, paramagnet-all or stabilizer (default by model).
    #[arg(long)]
    pub family: Option<String>,
    /// Base RNG seed.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output directory for JSON/CSV artifacts [env: WWLAB_OUT].
    #[arg(long, env = OUT_ENV)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a model and print a summary.
    Build {
        #[command(flatten)]
        common: Common,
        /// Dump dims, boundary conditions, projection tag and qubit count as JSON.
        #[arg(long)]
        dump: bool,
    },
    /// Check commutation, rank and logical count.
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Build an operator and report its syndrome.
    Ops {
        #[command(flatten)]
        common: Common,
        /// Named operator (e.g. Se-vert, Rsigma-horiz, Z-horiz) or a chain
        /// spec `kind=Se,axis=z,start=x:y:z,len=N` with kind one of
        /// Se, Sm, Seps, bare-sigma, bare-tau, Z.
        #[arg(long)]
        op: String,
    },
    /// Energy barrier of a symmetric decomposition of one logical.
    Barrier {
        #[command(flatten)]
        common: Common,
        /// Logical label, e.g. Se-vert or Rsigma-horiz.
        #[arg(long, default_value = "Se-vert")]
        logical: String,
        /// canonical, vertical, paired or oracle.
        #[arg(long, default_value = "canonical")]
        variant: String,
        /// Locality radius of each step.
        #[arg(long, default_value_t = 2)]
        radius: usize,
        /// State cap of the exhaustive oracle.
        #[arg(long, default_value_t = 200_000)]
        state_cap: usize,
        /// Also write per-step energies as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Barrier of both decomposition variants over a list of W values.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "Se-vert")]
        logical: String,
        /// Comma-separated W values.
        #[arg(long, default_value = "2,4,6,8")]
        ws: String,
    },
    /// Metropolis memory-time runs.
    Simulate {
        /// JSON config {model, dims, W, T, max_steps, checkpoints, trials, seed_base}.
        /// Flags below are used when no config file is given.
        #[arg(long)]
        config: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
        /// Temperature in units of one violated generator.
        #[arg(long = "T", default_value_t = 0.5)]
        t: f64,
        #[arg(long, default_value_t = 4)]
        trials: usize,
        /// Maximum Metropolis steps per trial.
        #[arg(long, default_value_t = 100_000)]
        steps: u64,
        /// Steps between checkpoints (default: one sweep).
        #[arg(long)]
        checkpoints: Option<u64>,
        /// Radius of the move balls.
        #[arg(long, default_value_t = 1)]
        radius: usize,
        /// Zero-temperature sweeps used to read the logicals at checkpoints
        /// that still carry excitations.
        #[arg(long, default_value_t = 0)]
        quench: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Build { common, dump } => commands::build(&common, dump),
        Command::Verify { common } => commands::verify(&common),
        Command::Ops { common, op } => commands::ops(&common, &op),
        Command::Barrier {
            common,
            logical,
            variant,
            radius,
            state_cap,
            csv,
        } => commands::barrier(&common, &logical, &variant, radius, state_cap, csv.as_deref()),
        Command::Sweep { common, logical, ws } => commands::sweep(&common, &logical, &ws),
        Command::Simulate {
            config,
            common,
            t,
            trials,
            steps,
            checkpoints,
            radius,
            quench,
        } => commands::simulate(
            config.as_deref(),
            &common,
            commands::SimFlags {
                t,
                trials,
                steps,
                checkpoints,
                radius,
                quench,
            },
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
