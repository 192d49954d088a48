use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};
use wwlab::barrier::{
    canonical_decomposition, minimal_barrier_oracle, paired_decomposition, path_energy, verify_scaling, Variant,
};
use wwlab::codes::{check_commutation, Species};
use wwlab::dynamics::{measure_memory_time, MemoryConfig};
use wwlab::operators::{bare_string, decorated_string, named_operator, syndrome_report, tracked_logicals, StringKind};
use wwlab::symmetry::{enforced_generators, Family, Region, SymmetrySpec};
use wwlab::{build as build_code, Axis, Model, PauliOperator, Side, StabilizerCode};

use crate::config::{parse_dims, SimulateConfig};
use crate::{CliError, Common};

type CliResult<T> = Result<T, CliError>;

pub struct SimFlags {
    pub t: f64,
    pub trials: usize,
    pub steps: u64,
    pub checkpoints: Option<u64>,
    pub radius: usize,
    pub quench: u64,
}

struct Setup {
    model: Model,
    dims: Vec<usize>,
    code: StabilizerCode,
    spec: SymmetrySpec,
}

fn default_dims(model: Model) -> Vec<usize> {
    match model {
        Model::Toric2d => vec![4, 4],
        _ => vec![4, 4, 4],
    }
}

fn parse_model(s: &str) -> CliResult<Model> {
    s.parse::<Model>().map_err(|e| CliError::Usage(e.to_string()))
}

fn parse_family(s: &str) -> CliResult<Family> {
    serde_json::from_value(Value::String(s.to_string()))
        .map_err(|_| CliError::Usage(format!("unknown family {s:?} (vertex, paramagnet-all, stabilizer)")))
}

fn parse_region(s: &str) -> CliResult<Region> {
    s.parse::<Region>().map_err(|e| CliError::Usage(e.to_string()))
}

fn setup_from(model: Model, dims: Vec<usize>, region: Region, family: Option<Family>) -> CliResult<Setup> {
    let code = build_code(model, &dims)?;
    let spec = match family {
        Some(f) => SymmetrySpec::new(f, region),
        None => SymmetrySpec::default_for(&code, region),
    };
    Ok(Setup {
        model,
        dims,
        code,
        spec,
    })
}

fn setup(common: &Common) -> CliResult<Setup> {
    let model = parse_model(&common.model)?;
    let dims = match &common.dims {
        Some(s) => parse_dims(s, model)?,
        None => default_dims(model),
    };
    let region = parse_region(&common.w)?;
    let family = common.family.as_deref().map(parse_family).transpose()?;
    setup_from(model, dims, region, family)
}

/// Echo of the inputs that determine an artifact.
fn echo(s: &Setup, seed: u64, extra: Value) -> Value {
    let mut cfg = json!({
        "model": s.model,
        "dims": s.dims,
        "W": s.spec.region,
        "family": s.spec.family,
        "seed": seed,
    });
    if let (Value::Object(base), Value::Object(more)) = (&mut cfg, extra) {
        base.extend(more);
    }
    cfg
}

fn write_out(dir: Option<&Path>, name: &str, body: &str) -> CliResult<Option<PathBuf>> {
    let Some(dir) = dir else { return Ok(None) };
    fs::create_dir_all(dir)?;
    let path = dir.join(name);
    fs::write(&path, body)?;
    Ok(Some(path))
}

/// Print `value` as pretty JSON and mirror it to `<out>/<name>.json`.
fn emit<T: Serialize>(common: &Common, name: &str, value: &T) -> CliResult<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    print!("{text}");
    write_out(common.out.as_deref(), &format!("{name}.json"), &text)?;
    Ok(())
}

pub fn build(common: &Common, dump: bool) -> CliResult<()> {
    let s = setup(common)?;
    let info = s.code.complex().info();
    let mut out = json!({
        "config": echo(&s, common.seed, json!({})),
        "fixture_hash": s.code.fixture_hash(),
        "n_qubits": s.code.n_qubits(),
        "n_generators": s.code.hamiltonian().len(),
        "n_symmetry_generators": s.code.symmetry_generators().len(),
    });
    if dump {
        out["complex"] = serde_json::to_value(&info)?;
        out["decorated"] = json!(s.code.is_decorated());
    }
    emit(common, "build", &out)
}

pub fn verify(common: &Common) -> CliResult<()> {
    let s = setup(common)?;
    let report = check_commutation(&s.code);
    let rank = s.code.rank();
    let per_side = s.code.boundary_logical_count(Side::Right);
    let out = json!({
        "config": echo(&s, common.seed, json!({})),
        "model": s.model,
        "dims": s.dims,
        "n_qubits": s.code.n_qubits(),
        "n_generators": s.code.hamiltonian().len(),
        "rank": rank,
        "k": s.code.logical_qubit_count(),
        "k_per_boundary": per_side,
        "commutation": report,
        "all_commute": report.all_commute(),
        "fixture_hash": s.code.fixture_hash(),
    });
    emit(common, "verify", &out)
}

fn parse_axis(s: &str) -> CliResult<Axis> {
    match s {
        "x" => Ok(Axis::X),
        "y" => Ok(Axis::Y),
        "z" => Ok(Axis::Z),
        _ => Err(CliError::Usage(format!("unknown axis {s:?}"))),
    }
}

/// `kind=Se,axis=z,start=x:y:z,len=N`
fn chain_operator(code: &StabilizerCode, spec: &str) -> CliResult<PauliOperator> {
    let bad = || CliError::Usage(format!("cannot parse operator spec {spec:?}"));
    let (mut kind, mut axis, mut start, mut len) = (None, None, [0i64; 3], None);
    for part in spec.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(bad)?;
        match k.trim() {
            "kind" => kind = Some(v.trim().to_string()),
            "axis" => axis = Some(parse_axis(v.trim())?),
            "start" => {
                let coords: Vec<i64> = v.split(':').map(|c| c.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad())?;
                if coords.is_empty() || coords.len() > 3 {
                    return Err(bad());
                }
                start[..coords.len()].copy_from_slice(&coords);
            }
            "len" => len = Some(v.trim().parse::<usize>().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    let (kind, axis, len) = (kind.ok_or_else(bad)?, axis.ok_or_else(bad)?, len.ok_or_else(bad)?);
    let chain = code.complex().straight_chain(start, axis, len)?;
    let op = match kind.as_str() {
        "bare-sigma" => bare_string(code, &chain, Species::Sigma)?,
        "bare-tau" => bare_string(code, &chain, Species::Tau)?,
        "Z" => bare_string(code, &chain, Species::Single)?,
        k => decorated_string(code, &chain, StringKind::parse(k)?)?,
    };
    Ok(op)
}

pub fn ops(common: &Common, op: &str) -> CliResult<()> {
    let s = setup(common)?;
    let operator = if op.contains('=') {
        chain_operator(&s.code, op)?
    } else {
        named_operator(&s.code, op)?
    };
    let enforced = enforced_generators(&s.code, &s.spec);
    let out = json!({
        "config": echo(&s, common.seed, json!({ "op": op })),
        "fixture_hash": s.code.fixture_hash(),
        "operator": operator.to_hex(),
        "weight": operator.weight(),
        "respects_symmetry": wwlab::symmetry::respects_symmetry(&enforced, &operator),
        "syndrome": syndrome_report(&s.code, &operator),
    });
    emit(common, "ops", &out)
}

pub fn barrier(
    common: &Common,
    logical: &str,
    variant: &str,
    radius: usize,
    state_cap: usize,
    csv_path: Option<&Path>,
) -> CliResult<()> {
    let s = setup(common)?;
    let extra = json!({ "logical": logical, "variant": variant, "radius": radius });
    let enforced = enforced_generators(&s.code, &s.spec);
    let path = match variant {
        "canonical" => canonical_decomposition(&s.code, &s.spec, logical, Variant::Canonical)?,
        "vertical" => canonical_decomposition(&s.code, &s.spec, logical, Variant::VerticalGrowth)?,
        "paired" => paired_decomposition(&s.code, logical)?,
        "oracle" => {
            let target = named_operator(&s.code, logical)?;
            let result = minimal_barrier_oracle(&s.code, &s.spec, &target, radius, state_cap)?;
            let mut extra = extra;
            extra["state_cap"] = json!(state_cap);
            let out = json!({
                "config": echo(&s, common.seed, extra),
                "fixture_hash": s.code.fixture_hash(),
                "oracle": result,
            });
            return emit(common, "barrier", &out);
        }
        other => return Err(CliError::Usage(format!("unknown variant {other:?}"))),
    };
    let report = path_energy(&s.code, &enforced, &path, radius)?;

    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["step", "energy"])?;
    for (i, e) in report.per_step_energies.iter().enumerate() {
        wtr.write_record([i.to_string(), e.to_string()])?;
    }
    let csv_text = String::from_utf8(wtr.into_inner().map_err(|e| CliError::Usage(e.to_string()))?)
        .expect("csv output is utf-8");
    if let Some(p) = csv_path {
        fs::write(p, &csv_text)?;
    }
    write_out(common.out.as_deref(), "barrier.csv", &csv_text)?;

    let mut out = serde_json::to_value(&report)?;
    out["config"] = echo(&s, common.seed, extra);
    out["fixture_hash"] = json!(s.code.fixture_hash());
    emit(common, "barrier", &out)
}

pub fn sweep(common: &Common, logical: &str, ws: &str) -> CliResult<()> {
    let s = setup(common)?;
    let ws: Vec<usize> = ws
        .split(',')
        .map(|w| w.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("cannot parse W list {ws:?}")))?;
    let report = verify_scaling(&s.code, s.spec.family, logical, &ws)?;
    let out = json!({
        "config": echo(&s, common.seed, json!({ "logical": logical, "ws": ws })),
        "fixture_hash": s.code.fixture_hash(),
        "scaling": report,
    });
    emit(common, "sweep", &out)
}

pub fn simulate(config: Option<&Path>, common: &Common, flags: SimFlags) -> CliResult<()> {
    let cfg: SimulateConfig = match config {
        Some(p) => serde_json::from_str(&fs::read_to_string(p)?)?,
        None => {
            let model = parse_model(&common.model)?;
            SimulateConfig {
                model,
                dims: match &common.dims {
                    Some(d) => parse_dims(d, model)?,
                    None => default_dims(model),
                },
                w: parse_region(&common.w)?,
                t: flags.t,
                max_steps: flags.steps,
                checkpoints: flags.checkpoints,
                trials: flags.trials,
                seed_base: common.seed,
                radius: flags.radius,
                family: common.family.as_deref().map(parse_family).transpose()?,
                quench_sweeps: flags.quench,
            }
        }
    };
    let want = if cfg.model == Model::Toric2d { 2 } else { 3 };
    if cfg.dims.len() != want || cfg.dims.iter().any(|&d| d < 2) {
        return Err(CliError::Dims(format!("{:?} is not valid for {}", cfg.dims, cfg.model)));
    }
    let s = setup_from(cfg.model, cfg.dims.clone(), cfg.w, cfg.family)?;
    let logicals: Vec<PauliOperator> = tracked_logicals(&s.code)?.into_iter().map(|(_, l)| l).collect();
    let mem = MemoryConfig {
        temperature: cfg.t,
        max_steps: cfg.max_steps,
        checkpoint_interval: cfg.checkpoints,
        trials: cfg.trials,
        seed_base: cfg.seed_base,
        radius: cfg.radius,
        quench_sweeps: cfg.quench_sweeps,
    };
    let report = measure_memory_time(&s.code, &s.spec, &logicals, &mem)?;

    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record([
        "seed",
        "failure_step",
        "steps",
        "accepted",
        "checkpoints",
        "zero_syndrome_checkpoints",
        "energy_min",
        "energy_max",
        "energy_mean",
        "symmetry_conserved",
    ])?;
    for r in &report.records {
        wtr.write_record([
            r.seed.to_string(),
            r.failure_step.map_or_else(|| "censored".to_string(), |f| f.to_string()),
            r.steps.to_string(),
            r.accepted.to_string(),
            r.checkpoints.to_string(),
            r.zero_syndrome_checkpoints.to_string(),
            r.energy_min.to_string(),
            r.energy_max.to_string(),
            format!("{:.6}", r.energy_mean),
            r.symmetry_conserved.to_string(),
        ])?;
    }
    let csv_text = String::from_utf8(wtr.into_inner().map_err(|e| CliError::Usage(e.to_string()))?)
        .expect("csv output is utf-8");
    write_out(common.out.as_deref(), "simulate.csv", &csv_text)?;

    let out = json!({
        "config": cfg,
        "family": s.spec.family,
        "fixture_hash": s.code.fixture_hash(),
        "n_qubits": s.code.n_qubits(),
        "trials": report.records.len(),
        "failures": report.failures,
        "censored": report.censored,
        "mean_failure_step": report.mean_failure_step,
        "median_failure_step": report.median_failure_step,
        "symmetry_conserved": report.symmetry_conserved,
    });
    emit(common, "simulate", &out)
}
