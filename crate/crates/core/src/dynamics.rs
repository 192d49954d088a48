//! Metropolis dynamics over symmetric local moves and logical memory times.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{GeneratorSet, StabilizerCode};
use crate::error::{Error, Result};
use crate::gf2::BitVec;
use crate::pauli::{PauliOperator, SparsePauli};
use crate::symmetry::{enforced_generators, Move, MoveSet, SymmetrySpec};

#[derive(Clone, Debug)]
pub struct SimulationState {
    frame_x: BitVec,
    frame_z: BitVec,
    syndrome: BitVec,
    energy: usize,
    step: u64,
    rng: ChaCha8Rng,
}

impl SimulationState {
    pub fn new(code: &StabilizerCode, seed: u64) -> Self {
        let n = code.n_qubits();
        Self {
            frame_x: BitVec::zeros(n),
            frame_z: BitVec::zeros(n),
            syndrome: BitVec::zeros(code.hamiltonian().len()),
            energy: 0,
            step: 0,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn energy(&self) -> usize {
        self.energy
    }

    pub fn step(&self) -> u64 {
        self.step
    }

    pub fn syndrome(&self) -> &BitVec {
        &self.syndrome
    }

    pub fn frame(&self) -> PauliOperator {
        PauliOperator::from_masks(self.frame_x.clone(), self.frame_z.clone())
            .expect("frame masks share a length")
    }

    fn frame_sparse(&self) -> SparsePauli {
        SparsePauli {
            x: self.frame_x.iter_ones().map(|q| q as u32).collect(),
            z: self.frame_z.iter_ones().map(|q| q as u32).collect(),
        }
    }

    /// Whether the frame anticommutes with `op`.
    pub fn anticommutes_with(&self, op: &SparsePauli) -> bool {
        let a = op.x.iter().filter(|&&q| self.frame_z.get(q as usize)).count();
        let b = op.z.iter().filter(|&&q| self.frame_x.get(q as usize)).count();
        (a + b) % 2 == 1
    }
}

/// Acceptance probabilities `exp(-dE / T)` for `dE = 0..`.
#[derive(Clone, Debug)]
pub struct Boltzmann {
    table: Vec<f64>,
}

impl Boltzmann {
    pub fn new(temperature: f64, max_delta: usize) -> Result<Self> {
        if temperature.is_nan() || temperature <= 0.0 {
            return Err(Error::Config(format!("temperature must be positive, got {temperature}")));
        }
        Ok(Self {
            table: (0..=max_delta).map(|d| (-(d as f64) / temperature).exp()).collect(),
        })
    }

    pub fn for_moves(temperature: f64, moves: &MoveSet) -> Result<Self> {
        let max = moves.iter().map(|m| m.footprint.len()).max().unwrap_or(0);
        Self::new(temperature, max)
    }
}

/// Propose one move uniformly over (center, basis element) pairs and apply
/// it with probability `min(1, exp(-dE/T))`. Returns whether it was taken.
pub fn metropolis_step(state: &mut SimulationState, moves: &MoveSet, weights: &Boltzmann) -> bool {
    state.step += 1;
    let m = moves.get(state.rng.gen_range(0..moves.len()));
    let up = m
        .footprint
        .iter()
        .filter(|&&g| !state.syndrome.get(g as usize))
        .count();
    let down = m.footprint.len() - up;
    let accept = up <= down || state.rng.gen::<f64>() < weights.table[up - down];
    if accept {
        apply_move(state, m);
    }
    accept
}

fn apply_move(state: &mut SimulationState, m: &Move) {
    for &g in &m.footprint {
        if state.syndrome.get(g as usize) {
            state.energy -= 1;
        } else {
            state.energy += 1;
        }
        state.syndrome.flip(g as usize);
    }
    for &q in &m.op.x {
        state.frame_x.flip(q as usize);
    }
    for &q in &m.op.z {
        state.frame_z.flip(q as usize);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemoryConfig {
    pub temperature: f64,
    pub max_steps: u64,
    /// Steps between checkpoints; `None` means one sweep (`n_qubits`).
    pub checkpoint_interval: Option<u64>,
    pub trials: usize,
    pub seed_base: u64,
    pub radius: usize,
    /// Sweeps of zero-temperature relaxation used to read the logicals at
    /// a checkpoint that still carries excitations; 0 reads only
    /// checkpoints that are already at zero syndrome.
    #[serde(default)]
    pub quench_sweeps: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRecord {
    pub seed: u64,
    /// First checkpoint whose (relaxed) zero-syndrome frame anticommutes
    /// with a tracked logical; `None` when censored at `max_steps`.
    pub failure_step: Option<u64>,
    pub steps: u64,
    pub accepted: u64,
    pub checkpoints: u64,
    /// Checkpoints at which the logicals could be read: zero syndrome,
    /// either directly or after relaxation.
    pub zero_syndrome_checkpoints: u64,
    pub energy_min: usize,
    pub energy_max: usize,
    pub energy_mean: f64,
    /// Parity of each tracked logical at the last readable checkpoint.
    pub logical_parities: Vec<bool>,
    /// Enforced generators were satisfied at every checkpoint.
    pub symmetry_conserved: bool,
    /// Cached syndrome matched a recomputation at every checkpoint.
    pub syndrome_consistent: bool,
}

/// Relax a copy of `state` with moves that never raise the energy, for at
/// most `sweeps * n_qubits` proposals. Returns the copy once it reaches
/// zero syndrome.
pub fn quench(
    state: &SimulationState,
    moves: &MoveSet,
    n_qubits: usize,
    sweeps: u64,
    seed: u64,
) -> Option<SimulationState> {
    let mut st = state.clone();
    st.rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = sweeps * n_qubits as u64;
    for _ in 0..budget {
        if st.energy == 0 {
            break;
        }
        st.step += 1;
        let m = moves.get(st.rng.gen_range(0..moves.len()));
        let up = m.footprint.iter().filter(|&&g| !st.syndrome.get(g as usize)).count();
        if up * 2 <= m.footprint.len() {
            apply_move(&mut st, m);
        }
    }
    (st.energy == 0).then_some(st)
}

/// Run one trajectory from the identity frame.
pub fn run_trajectory(
    code: &StabilizerCode,
    moves: &MoveSet,
    enforced: &GeneratorSet,
    logicals: &[SparsePauli],
    cfg: &MemoryConfig,
    seed: u64,
) -> Result<TrajectoryRecord> {
    let weights = Boltzmann::for_moves(cfg.temperature, moves)?;
    let interval = cfg.checkpoint_interval.unwrap_or(code.n_qubits() as u64).max(1);
    let mut st = SimulationState::new(code, seed);
    let mut rec = TrajectoryRecord {
        seed,
        failure_step: None,
        steps: 0,
        accepted: 0,
        checkpoints: 0,
        zero_syndrome_checkpoints: 0,
        energy_min: usize::MAX,
        energy_max: 0,
        energy_mean: 0.0,
        logical_parities: vec![false; logicals.len()],
        symmetry_conserved: true,
        syndrome_consistent: true,
    };
    let mut energy_sum = 0.0;
    while st.step < cfg.max_steps {
        let chunk = interval.min(cfg.max_steps - st.step);
        for _ in 0..chunk {
            rec.accepted += metropolis_step(&mut st, moves, &weights) as u64;
        }
        rec.checkpoints += 1;
        let e = st.energy;
        energy_sum += e as f64;
        rec.energy_min = rec.energy_min.min(e);
        rec.energy_max = rec.energy_max.max(e);
        let frame = st.frame_sparse();
        rec.symmetry_conserved &= enforced.anticommuting(&frame).is_empty();
        let recomputed = code.hamiltonian().anticommuting(&frame);
        rec.syndrome_consistent &= recomputed.len() == e
            && recomputed.iter().all(|&g| st.syndrome.get(g as usize));
        let relaxed;
        let readable = if e == 0 {
            Some(&st)
        } else if cfg.quench_sweeps > 0 {
            let qseed = seed ^ rec.checkpoints.wrapping_mul(0x9E37_79B9_7F4A_7C15);
            relaxed = quench(&st, moves, code.n_qubits(), cfg.quench_sweeps, qseed);
            relaxed.as_ref()
        } else {
            None
        };
        if let Some(r) = readable {
            rec.zero_syndrome_checkpoints += 1;
            rec.logical_parities = logicals.iter().map(|l| r.anticommutes_with(l)).collect();
            if rec.logical_parities.iter().any(|&p| p) {
                rec.failure_step = Some(st.step);
                break;
            }
        }
    }
    rec.steps = st.step;
    rec.energy_mean = if rec.checkpoints > 0 {
        energy_sum / rec.checkpoints as f64
    } else {
        0.0
    };
    if rec.checkpoints == 0 {
        rec.energy_min = 0;
    }
    Ok(rec)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MemoryReport {
    pub records: Vec<TrajectoryRecord>,
    pub failures: usize,
    pub censored: usize,
    /// Mean over trials that failed.
    pub mean_failure_step: Option<f64>,
    /// Median over all trials with censored runs counted as infinite;
    /// `None` when the median falls on a censored run.
    pub median_failure_step: Option<f64>,
    pub symmetry_conserved: bool,
}

/// Median with `None` entries ordered after every finite value.
pub fn censored_median(times: &[Option<u64>]) -> Option<f64> {
    if times.is_empty() {
        return None;
    }
    let mut t: Vec<u64> = times.iter().map(|x| x.unwrap_or(u64::MAX)).collect();
    t.sort_unstable();
    let n = t.len();
    let (a, b) = if n % 2 == 1 {
        (t[n / 2], t[n / 2])
    } else {
        (t[n / 2 - 1], t[n / 2])
    };
    if a == u64::MAX || b == u64::MAX {
        None
    } else {
        Some((a as f64 + b as f64) / 2.0)
    }
}

impl MemoryReport {
    pub fn from_records(records: Vec<TrajectoryRecord>) -> Self {
        let times: Vec<Option<u64>> = records.iter().map(|r| r.failure_step).collect();
        let failed: Vec<u64> = times.iter().flatten().copied().collect();
        Self {
            failures: failed.len(),
            censored: records.len() - failed.len(),
            mean_failure_step: if failed.is_empty() {
                None
            } else {
                Some(failed.iter().map(|&t| t as f64).sum::<f64>() / failed.len() as f64)
            },
            median_failure_step: censored_median(&times),
            symmetry_conserved: records.iter().all(|r| r.symmetry_conserved),
            records,
        }
    }
}

/// Run `cfg.trials` independent trajectories with seeds
/// `seed_base, seed_base + 1, ...` in parallel.
pub fn measure_memory_time(
    code: &StabilizerCode,
    spec: &SymmetrySpec,
    logicals: &[PauliOperator],
    cfg: &MemoryConfig,
) -> Result<MemoryReport> {
    if cfg.trials == 0 {
        return Err(Error::Config("trials must be at least 1".into()));
    }
    let moves = MoveSet::build(code, spec, cfg.radius)?;
    let enforced = enforced_generators(code, spec);
    let logicals: Vec<SparsePauli> = logicals.iter().map(|l| l.to_sparse()).collect();
    let records = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|i| run_trajectory(code, &moves, &enforced, &logicals, cfg, cfg.seed_base + i))
        .collect::<Result<Vec<_>>>()?;
    Ok(MemoryReport::from_records(records))
}
