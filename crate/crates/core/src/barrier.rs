//! Energy barriers of local symmetric decompositions.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{GeneratorSet, Model, Species, StabilizerCode};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Reducer};
use crate::lattice::{Axis, Cell, Chain};
use crate::operators::{affine_fit, bare_string, decorated_string, named_operator, syndrome_report, StringKind};
use crate::pauli::{Pauli, PauliOperator, SparsePauli};
use crate::symmetry::{enforced_generators, first_unenforced_layer, MoveSet, Region, SymmetrySpec};

/// Ordered local factors whose product is a logical operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionPath {
    pub label: String,
    pub steps: Vec<SparsePauli>,
}

impl DecompositionPath {
    pub fn product(&self, n: usize) -> PauliOperator {
        let mut op = PauliOperator::identity(n);
        for s in &self.steps {
            op.mul_assign(&s.to_dense(n));
        }
        op
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathReport {
    pub steps: usize,
    pub peak_energy: usize,
    /// Energy of the partial product after each step, starting with the
    /// identity.
    pub per_step_energies: Vec<usize>,
    pub symmetric: bool,
}

/// Energy profile of a path. Every step must fit in a ball of the given
/// radius.
pub fn path_energy(
    code: &StabilizerCode,
    enforced: &GeneratorSet,
    path: &DecompositionPath,
    radius: usize,
) -> Result<PathReport> {
    let cx = code.complex();
    let mut syn = BitVec::zeros(code.hamiltonian().len());
    let mut energy = 0usize;
    let mut energies = vec![0];
    let mut symmetric = true;
    for (i, step) in path.steps.iter().enumerate() {
        let cells: Vec<Cell> = step
            .support()
            .into_iter()
            .map(|q| code.qubit_index(q).cell)
            .collect();
        if !cx.fits_in_ball(radius, &cells) {
            return Err(Error::InvalidPath(format!(
                "step {i} of {} does not fit in a ball of radius {radius}",
                path.label
            )));
        }
        symmetric &= enforced.anticommuting(step).is_empty();
        for g in code.hamiltonian().anticommuting(step) {
            let g = g as usize;
            if syn.get(g) {
                energy -= 1;
            } else {
                energy += 1;
            }
            syn.flip(g);
        }
        energies.push(energy);
    }
    Ok(PathReport {
        steps: path.steps.len(),
        peak_energy: energies.iter().copied().max().unwrap_or(0),
        per_step_energies: energies,
        symmetric,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Grow a loop up to the first unenforced layer, open it there and
    /// sweep one leg around the periodic direction.
    Canonical,
    /// Push a full-length loop into the bulk and break it there.
    VerticalGrowth,
}

/// How a string logical is built from a chain.
#[derive(Clone, Copy, Debug)]
enum StringFamily {
    Decorated(StringKind),
    Plain,
}

fn string_of(code: &StabilizerCode, chain: &Chain, fam: StringFamily) -> Result<PauliOperator> {
    match fam {
        StringFamily::Decorated(k) => decorated_string(code, chain, k),
        StringFamily::Plain => bare_string(code, chain, Species::Single),
    }
}

fn parse_string_label(code: &StabilizerCode, label: &str) -> Result<(Axis, StringFamily)> {
    let unknown = || Error::UnknownOperator(label.to_string());
    let (head, dir) = label.split_once('-').ok_or_else(unknown)?;
    let axis = match dir {
        "vert" if code.complex().is_3d() => Axis::Z,
        "vert" => Axis::Y,
        "horiz" => Axis::X,
        _ => return Err(unknown()),
    };
    let fam = match (code.model(), head) {
        (Model::ThreeFermion, "Se" | "Sm" | "Seps") => StringFamily::Decorated(StringKind::parse(head)?),
        (Model::ThreeFermion, _) => return Err(unknown()),
        (_, "Z") => StringFamily::Plain,
        _ => return Err(unknown()),
    };
    Ok((axis, fam))
}

/// Chain increments of a decomposition of the closed string along `axis`
/// at `y = 0`.
fn chain_steps(code: &StabilizerCode, axis: Axis, h: usize, variant: Variant) -> Result<Vec<Chain>> {
    let cx = code.complex();
    let len = cx.dims()[axis.index()];
    let normal = if axis == Axis::Z { Axis::X } else { Axis::Z };
    let (run, rise) = if axis == Axis::Y { (Axis::Y, Axis::X) } else { (axis, Axis::Y) };
    let at = |s: usize, t: usize| -> [i64; 3] {
        let mut p = [0i64; 3];
        p[run.index()] = s as i64;
        p[rise.index()] = t as i64;
        p
    };
    let face = |s: usize, t: usize| -> Result<Chain> {
        cx.face_at(at(s, t), normal)
            .map(|f| cx.face_boundary(f))
            .ok_or_else(|| Error::Geometry(format!("no face at {:?}", at(s, t))))
    };
    let edge = |s: usize, t: usize| -> Result<Chain> {
        cx.edge_at(at(s, t), run)
            .map(|e| Chain::from_edges([e]))
            .ok_or_else(|| Error::Geometry(format!("no edge at {:?}", at(s, t))))
    };
    let mut steps = Vec::new();
    match variant {
        Variant::Canonical => {
            for t in 0..h {
                steps.push(face(0, t)?);
            }
            steps.push(edge(0, h)?);
            for s in 1..len {
                steps.push(edge(s, h)?);
                for t in (0..h).rev() {
                    steps.push(face(s, t)?);
                }
            }
        }
        Variant::VerticalGrowth => {
            let top = h.max(1);
            for t in 0..top {
                for s in 0..len {
                    steps.push(face(s, t)?);
                }
            }
            for s in 0..len {
                steps.push(edge(s, top)?);
            }
        }
    }
    Ok(steps)
}

/// Local decomposition of a right-boundary string logical respecting the
/// enforced symmetry.
pub fn canonical_decomposition(
    code: &StabilizerCode,
    spec: &SymmetrySpec,
    label: &str,
    variant: Variant,
) -> Result<DecompositionPath> {
    let (axis, fam) = parse_string_label(code, label)?;
    let enforced = enforced_generators(code, spec);
    let ly = code.complex().dims()[1];
    let h = first_unenforced_layer(code, &enforced).ok_or(Error::CannotOpenLoop {
        w: match spec.region {
            Region::Width(w) => w,
            Region::Full => ly,
        },
        ly,
    })?;
    let steps = chain_steps(code, axis, h, variant)?
        .iter()
        .map(|c| string_of(code, c, fam).map(|op| op.to_sparse()))
        .collect::<Result<Vec<_>>>()?;
    Ok(DecompositionPath {
        label: label.to_string(),
        steps,
    })
}

/// Paired decomposition of a bulk membrane into single-qubit `X` factors,
/// swept in order of increasing y. Only the membranes that pair a left and
/// a right boundary logical admit one.
pub fn paired_decomposition(code: &StabilizerCode, label: &str) -> Result<DecompositionPath> {
    if code.model() != Model::ThreeFermion || !label.starts_with('R') {
        return Err(Error::NoSymmetricDecomposition(label.to_string()));
    }
    let target = named_operator(code, label)?;
    let cx = code.complex();
    let mut qubits: Vec<u32> = target.support().map(|q| q as u32).collect();
    qubits.sort_by_key(|&q| {
        let (p, _) = cx.cell_pos(code.qubit_index(q).cell);
        (p[1], p[2], p[0])
    });
    let steps = qubits
        .into_iter()
        .map(|q| {
            debug_assert_eq!(target.get(q as usize), Pauli::X);
            SparsePauli::from_lists(vec![q], vec![])
        })
        .collect();
    Ok(DecompositionPath {
        label: label.to_string(),
        steps,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum OracleResult {
    Exact { barrier: usize, explored: usize },
    Unreachable,
    Exhausted { explored: usize },
}

/// Whether `target` lies in the span of the symmetric local moves together
/// with the stabilizer group.
pub fn symmetric_reachable(code: &StabilizerCode, moves: &MoveSet, target: &PauliOperator) -> bool {
    let n = code.n_qubits();
    let mut red = code.stabilizer_reducer();
    for m in moves.iter() {
        red.insert(m.op.to_dense(n).symplectic());
    }
    red.contains(&target.symplectic())
}

/// Exact minimal barrier over products of symmetric local moves, found by
/// a bottleneck Dijkstra search over frames modulo the stabilizer group.
pub fn minimal_barrier_oracle(
    code: &StabilizerCode,
    spec: &SymmetrySpec,
    target: &PauliOperator,
    radius: usize,
    state_cap: usize,
) -> Result<OracleResult> {
    let moves = match MoveSet::build(code, spec, radius) {
        Ok(m) => m,
        Err(Error::EmptyMoveSet) if code.stabilizer_reducer().contains(&target.symplectic()) => {
            return Ok(OracleResult::Exact { barrier: 0, explored: 1 })
        }
        Err(Error::EmptyMoveSet) => return Ok(OracleResult::Unreachable),
        Err(e) => return Err(e),
    };
    if !symmetric_reachable(code, &moves, target) {
        return Ok(OracleResult::Unreachable);
    }
    let n = code.n_qubits();
    let stab: Reducer = code.stabilizer_reducer();
    let ng = code.hamiltonian().len();
    let mut classes: HashMap<BitVec, BitVec> = HashMap::new();
    for m in moves.iter() {
        let key = stab.reduced(&m.op.to_dense(n).symplectic());
        if key.is_zero() {
            continue;
        }
        classes
            .entry(key)
            .or_insert_with(|| BitVec::from_indices(ng, m.footprint.iter().map(|&g| g as usize)));
    }
    let mut edges: Vec<(BitVec, BitVec)> = classes.into_iter().collect();
    edges.sort();
    let goal = stab.reduced(&target.symplectic());

    let mut index: HashMap<BitVec, usize> = HashMap::new();
    let mut states: Vec<(BitVec, BitVec, usize)> = Vec::new();
    let start = BitVec::zeros(2 * n);
    index.insert(start.clone(), 0);
    states.push((start, BitVec::zeros(ng), 0));
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0usize, 0usize)));
    let mut done = vec![false];
    while let Some(Reverse((cost, i))) = heap.pop() {
        if done[i] {
            continue;
        }
        done[i] = true;
        if states[i].0 == goal {
            return Ok(OracleResult::Exact {
                barrier: cost,
                explored: states.len(),
            });
        }
        for (mk, ms) in &edges {
            let mut key = states[i].0.clone();
            key.xor_assign(mk);
            let mut syn = states[i].1.clone();
            syn.xor_assign(ms);
            let c = cost.max(syn.count_ones());
            match index.get(&key) {
                Some(&j) => {
                    if !done[j] && c < states[j].2 {
                        states[j].2 = c;
                        heap.push(Reverse((c, j)));
                    }
                }
                None => {
                    if states.len() >= state_cap {
                        return Ok(OracleResult::Exhausted {
                            explored: states.len(),
                        });
                    }
                    let j = states.len();
                    index.insert(key.clone(), j);
                    states.push((key, syn, c));
                    done.push(false);
                    heap.push(Reverse((c, j)));
                }
            }
        }
    }
    Ok(OracleResult::Unreachable)
}

/// Energy added per unit length of an open string in the bulk, measured
/// from decorated (or plain) strings of length 1..=6 along y.
pub fn flux_per_unit(code: &StabilizerCode, label: &str) -> Result<(f64, f64)> {
    let (_, fam) = parse_string_label(code, label)?;
    let cx = code.complex();
    let ly = cx.dims()[1];
    let max_len = 6.min(ly.saturating_sub(2));
    if max_len < 2 {
        return Err(Error::Size("need L_y >= 4 to measure string tension".into()));
    }
    let (xs, ys): (Vec<f64>, Vec<f64>) = (1..=max_len)
        .map(|l| -> Result<(f64, f64)> {
            let chain = cx.straight_chain([1, 1, 1], Axis::Y, l)?;
            let e = syndrome_report(code, &string_of(code, &chain, fam)?).energy;
            Ok((l as f64, e as f64))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    let (_, c, res) = affine_fit(&xs, &ys);
    Ok((c, res))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingRow {
    #[serde(rename = "W")]
    pub w: usize,
    pub canonical: usize,
    pub vertical: usize,
    pub barrier: usize,
    pub winner: Variant,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingReport {
    pub label: String,
    pub rows: Vec<ScalingRow>,
    /// Fit of the minimal barrier over the rows won by the canonical path.
    pub slope: Option<f64>,
    pub intercept: Option<f64>,
    pub residual: Option<f64>,
    /// Fit of the canonical path alone over every row.
    pub canonical_slope: f64,
    pub canonical_residual: f64,
    /// Energy per unit length of an open bulk string.
    pub tension: f64,
}

/// Barrier of the canonical and vertical-growth paths for each W.
pub fn verify_scaling(code: &StabilizerCode, family: crate::symmetry::Family, label: &str, ws: &[usize]) -> Result<ScalingReport> {
    let rows = ws
        .par_iter()
        .map(|&w| -> Result<ScalingRow> {
            let spec = SymmetrySpec::new(family, Region::Width(w));
            let ly = code.complex().dims()[1];
            if w >= ly {
                return Err(Error::CannotOpenLoop { w, ly });
            }
            let enforced = enforced_generators(code, &spec);
            let peak = |v| -> Result<usize> {
                let p = canonical_decomposition(code, &spec, label, v)?;
                Ok(path_energy(code, &enforced, &p, 2)?.peak_energy)
            };
            let canonical = peak(Variant::Canonical)?;
            let vertical = peak(Variant::VerticalGrowth)?;
            let (barrier, winner) = if canonical <= vertical {
                (canonical, Variant::Canonical)
            } else {
                (vertical, Variant::VerticalGrowth)
            };
            Ok(ScalingRow {
                w,
                canonical,
                vertical,
                barrier,
                winner,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let xs: Vec<f64> = rows.iter().map(|r| r.w as f64).collect();
    let cs: Vec<f64> = rows.iter().map(|r| r.canonical as f64).collect();
    let (_, canonical_slope, canonical_residual) = affine_fit(&xs, &cs);
    let won: Vec<&ScalingRow> = rows.iter().filter(|r| r.winner == Variant::Canonical).collect();
    let (slope, intercept, residual) = if won.len() >= 2 {
        let x: Vec<f64> = won.iter().map(|r| r.w as f64).collect();
        let y: Vec<f64> = won.iter().map(|r| r.barrier as f64).collect();
        let (a, c, r) = affine_fit(&x, &y);
        (Some(c), Some(a), Some(r))
    } else {
        (None, None, None)
    };
    let (tension, _) = flux_per_unit(code, label)?;
    Ok(ScalingReport {
        label: label.to_string(),
        rows,
        slope,
        intercept,
        residual,
        canonical_slope,
        canonical_residual,
        tension,
    })
}
