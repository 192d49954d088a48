use serde::{Deserialize, Serialize};
use wwlab::symmetry::{Family, Region};
use wwlab::Model;

use crate::CliError;

/// Side lengths from `--dims a,b[,c]`.
pub fn parse_dims(s: &str, model: Model) -> Result<Vec<usize>, CliError> {
    let dims: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Dims(format!("cannot parse {s:?} as comma-separated integers")))?;
    let want = if model == Model::Toric2d { 2 } else { 3 };
    if dims.len() != want {
        return Err(CliError::Dims(format!(
            "{model} takes {want} side lengths, got {}",
            dims.len()
        )));
    }
    if let Some(d) = dims.iter().find(|&&d| d < 2) {
        return Err(CliError::Dims(format!("side length {d} is below 2")));
    }
    Ok(dims)
}

/// Input of the `simulate` subcommand.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulateConfig {
    pub model: Model,
    pub dims: Vec<usize>,
    #[serde(rename = "W")]
    pub w: Region,
    #[serde(rename = "T")]
    pub t: f64,
    pub max_steps: u64,
    /// Steps between checkpoints; omitted or null means one sweep.
    #[serde(default)]
    pub checkpoints: Option<u64>,
    pub trials: usize,
    pub seed_base: u64,
    #[serde(default = "default_radius")]
    pub radius: usize,
    #[serde(default)]
    pub family: Option<Family>,
    /// Zero-temperature sweeps used to read logicals at excited checkpoints.
    #[serde(default)]
    pub quench_sweeps: u64,
}

fn default_radius() -> usize {
    1
}
