//! String and membrane operators and syndrome classification.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::codes::{GeneratorKind, Model, Species, StabilizerCode};
use crate::error::{Error, Result};
use crate::lattice::{Axis, Cell, Chain, EdgeId, Side};
use crate::pauli::{Pauli, PauliOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StringKind {
    E,
    M,
    Eps,
}

impl StringKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "e" | "Se" => Ok(StringKind::E),
            "m" | "Sm" => Ok(StringKind::M),
            "eps" | "Seps" => Ok(StringKind::Eps),
            _ => Err(Error::Parse(format!("unknown string kind {s:?}"))),
        }
    }
}

fn put(code: &StabilizerCode, op: &mut PauliOperator, e: EdgeId, sp: Species, p: Pauli) {
    if let Some(q) = code.edge_qubit(e, sp) {
        op.apply(q as usize, p);
    }
}

fn string_species(code: &StabilizerCode, species: Species) -> Result<Species> {
    let two = code.qubit_index(0).species != Species::Single;
    match (two, species) {
        (false, _) => Ok(Species::Single),
        (true, Species::Sigma | Species::Tau) => Ok(species),
        (true, Species::Single) => Err(Error::InvalidCode(format!(
            "{} carries two species per edge",
            code.model()
        ))),
    }
}

/// `Z` of one species on every edge of the chain, with no decoration.
pub fn bare_string(code: &StabilizerCode, chain: &Chain, species: Species) -> Result<PauliOperator> {
    let sp = string_species(code, species)?;
    let mut op = PauliOperator::identity(code.n_qubits());
    for &e in chain.edges() {
        put(code, &mut op, e, sp, Pauli::Z);
    }
    Ok(op)
}

/// Decorated string along a chain. For `e`: `sigma^z` on the chain,
/// `sigma^x` on over and under legs and `tau^x` on under legs; `m` swaps the
/// roles of the species with `sigma^x` on over legs. `eps` is their product.
pub fn decorated_string(code: &StabilizerCode, chain: &Chain, kind: StringKind) -> Result<PauliOperator> {
    if code.model() != Model::ThreeFermion {
        return Err(Error::InvalidCode(format!(
            "decorated strings are defined for 3d3f, not {}",
            code.model()
        )));
    }
    let n = code.n_qubits();
    if kind == StringKind::Eps {
        let e = decorated_string(code, chain, StringKind::E)?;
        let m = decorated_string(code, chain, StringKind::M)?;
        return Ok(&e * &m);
    }
    let (s, t) = match kind {
        StringKind::E => (Species::Sigma, Species::Tau),
        _ => (Species::Tau, Species::Sigma),
    };
    let mut op = PauliOperator::identity(n);
    for &e in chain.edges() {
        put(code, &mut op, e, s, Pauli::Z);
    }
    if code.is_decorated() {
        let d = code.complex().offset_curve(chain);
        for &e in d.over.symmetric_difference(&d.under) {
            put(code, &mut op, e, s, Pauli::X);
        }
        let partner_legs = if kind == StringKind::E { &d.under } else { &d.over };
        for &e in partner_legs {
            put(code, &mut op, e, t, Pauli::X);
        }
    }
    Ok(op)
}

/// String supported in the right boundary plane. In 3d3f it is the
/// decorated string with legs truncated by the boundary; in the
/// paramagnet it is a plain `Z` string of the boundary toric code.
pub fn boundary_string(code: &StabilizerCode, chain: &Chain, kind: StringKind) -> Result<PauliOperator> {
    let cx = code.complex();
    if !chain
        .edges()
        .iter()
        .all(|&e| cx.boundary_side(Cell::Edge(e)) == Some(Side::Right))
    {
        return Err(Error::NotOnBoundary);
    }
    match code.model() {
        Model::ThreeFermion => decorated_string(code, chain, kind),
        Model::ParamagnetBulk if kind == StringKind::E => bare_string(code, chain, Species::Single),
        m => Err(Error::InvalidCode(format!("no {kind:?} boundary strings in {m}"))),
    }
}

/// `X` of one species on a set of edges; the dual cells form a membrane.
pub fn dual_membrane(code: &StabilizerCode, edges: &BTreeSet<EdgeId>, species: Species) -> Result<PauliOperator> {
    let sp = string_species(code, species)?;
    let mut op = PauliOperator::identity(code.n_qubits());
    for &e in edges {
        put(code, &mut op, e, sp, Pauli::X);
    }
    Ok(op)
}

/// Named operators. 3d3f: `Se-vert`, `Se-horiz`, `Sm-vert`, `Sm-horiz`,
/// `Seps-vert`, `Seps-horiz` on the right boundary and the membranes
/// `Rsigma-vert`, `Rsigma-horiz`, `Rtau-vert`, `Rtau-horiz`. Toric codes and
/// the paramagnet: `Z-vert`, `Z-horiz`, `X-vert`, `X-horiz`.
///
/// "vert" strings run along z and "horiz" strings along x; the 2d torus
/// uses y for "vert".
pub fn named_operator(code: &StabilizerCode, label: &str) -> Result<PauliOperator> {
    let cx = code.complex();
    let [lx, ly, lz] = cx.dims();
    let unknown = || Error::UnknownOperator(label.to_string());
    let (head, dir) = label.split_once('-').ok_or_else(unknown)?;
    let vert_axis = if cx.is_3d() { Axis::Z } else { Axis::Y };
    let (axis, len) = match dir {
        "vert" => (vert_axis, if cx.is_3d() { lz } else { ly }),
        "horiz" => (Axis::X, lx),
        _ => return Err(unknown()),
    };
    match (code.model(), head) {
        (Model::ThreeFermion, "Se" | "Sm" | "Seps") => {
            let chain = cx.straight_chain([0, 0, 0], axis, len)?;
            boundary_string(code, &chain, StringKind::parse(head)?)
        }
        (Model::ThreeFermion, "Rsigma" | "Rtau") => {
            let sp = if head == "Rsigma" { Species::Sigma } else { Species::Tau };
            let normal = if dir == "vert" { Axis::X } else { Axis::Z };
            dual_membrane(code, &cx.dual_plane(normal, 0)?, sp)
        }
        (Model::ThreeFermion, _) => Err(unknown()),
        (_, "Z") => {
            let chain = cx.straight_chain([0, 0, 0], axis, len)?;
            bare_string(code, &chain, Species::Single)
        }
        (_, "X") => {
            // Dual string crossing every edge along the partner Z string.
            let partner = if dir == "vert" { Axis::X } else { vert_axis };
            let edges: BTreeSet<EdgeId> = cx
                .dual_plane(partner, 0)?
                .into_iter()
                .filter(|&e| !cx.has_boundary() || cx.edge_pos(e).0[1] == 0)
                .collect();
            dual_membrane(code, &edges, Species::Single)
        }
        _ => Err(unknown()),
    }
}

/// Logical operators whose commutation with a frame decides memory failure:
/// the right-boundary strings for slab models and a symplectic basis for
/// toric codes.
pub fn tracked_logicals(code: &StabilizerCode) -> Result<Vec<(String, PauliOperator)>> {
    let labels: &[&str] = match code.model() {
        Model::ThreeFermion => &["Se-vert", "Sm-horiz", "Sm-vert", "Se-horiz"],
        Model::ParamagnetBulk | Model::Toric2d => &["Z-vert", "X-horiz", "Z-horiz", "X-vert"],
        Model::Toric3d => {
            return Ok(code
                .extract_logicals()
                .into_iter()
                .enumerate()
                .flat_map(|(i, (x, z))| [(format!("X{i}"), x), (format!("Z{i}"), z)])
                .collect())
        }
    };
    labels
        .iter()
        .map(|&l| Ok((l.to_string(), named_operator(code, l)?)))
        .collect()
}

/// Violated generators grouped by excitation type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SyndromeReport {
    pub energy: usize,
    pub violated: Vec<u32>,
    pub point_excitations: usize,
    pub sigma_flux: usize,
    pub tau_flux: usize,
    pub flux: usize,
    pub paramagnet: usize,
    pub sigma_flux_components: usize,
    pub tau_flux_components: usize,
    pub flux_components: usize,
}

pub fn syndrome_report(code: &StabilizerCode, op: &PauliOperator) -> SyndromeReport {
    let violated = code.hamiltonian().anticommuting(&op.to_sparse());
    let kind_of = |g: u32| code.hamiltonian().get(g as usize).kind;
    let count = |pred: &dyn Fn(GeneratorKind) -> bool| violated.iter().filter(|&&g| pred(kind_of(g))).count();
    let of_kind = |pred: &dyn Fn(GeneratorKind) -> bool| -> Vec<u32> {
        violated.iter().copied().filter(|&g| pred(kind_of(g))).collect()
    };
    let sigma = of_kind(&|k| k == GeneratorKind::FaceSigma);
    let tau = of_kind(&|k| k == GeneratorKind::FaceTau);
    let single = of_kind(&|k| matches!(k, GeneratorKind::Face | GeneratorKind::BoundaryFace));
    SyndromeReport {
        energy: violated.len(),
        point_excitations: count(&|k| k.is_vertex_term()),
        sigma_flux: sigma.len(),
        tau_flux: tau.len(),
        flux: single.len(),
        paramagnet: count(&|k| matches!(k, GeneratorKind::ParaEdge | GeneratorKind::ParaFace)),
        sigma_flux_components: flux_components(code, &sigma),
        tau_flux_components: flux_components(code, &tau),
        flux_components: flux_components(code, &single),
        violated,
    }
}

/// Connected components of violated face terms. In 3d two faces are
/// adjacent when they bound a common cube; on the 2-torus and inside a
/// boundary plane, when they share an edge.
pub fn flux_components(code: &StabilizerCode, gens: &[u32]) -> usize {
    let cx = code.complex();
    let faces: Vec<_> = gens
        .iter()
        .filter_map(|&g| match code.hamiltonian().get(g as usize).cell {
            Cell::Face(f) => Some(f),
            _ => None,
        })
        .collect();
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut j = i;
        while p[j] != r {
            let n = p[j];
            p[j] = r;
            j = n;
        }
        r
    }
    let mut owner: HashMap<Cell, usize> = HashMap::new();
    for (i, &f) in faces.iter().enumerate() {
        let planar = !cx.is_3d() || cx.boundary_side(Cell::Face(f)).is_some() && code.model() == Model::ParamagnetBulk;
        let links: Vec<Cell> = if planar {
            cx.face_edges(f).into_iter().map(Cell::Edge).collect()
        } else {
            cx.face_coboundary(f).map(Cell::Cube).collect()
        };
        for c in links {
            match owner.get(&c) {
                Some(&j) => {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
                None => {
                    owner.insert(c, i);
                }
            }
        }
    }
    (0..faces.len()).filter(|&i| find(&mut parent, i) == i).count()
}

/// Least-squares fit `y = a + c x`; returns `(a, c, max |residual|)`.
pub fn affine_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let c = if sxx > 0.0 { sxy / sxx } else { 0.0 };
    let a = my - c * mx;
    let res = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| (y - a - c * x).abs())
        .fold(0.0, f64::max);
    (a, c, res)
}
