//! Enforced 1-form symmetries and symmetric local moves.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codes::{Generator, GeneratorKind, GeneratorSet, StabilizerCode};
use crate::error::{Error, Result};
use crate::gf2::{nullspace, sparsify, BitVec};
use crate::lattice::{Cell, VertexId};
use crate::pauli::{PauliOperator, SparsePauli};

/// Which generators a symmetry constraint draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// Vertex terms of the Hamiltonian.
    Vertex,
    /// All symmetry generators of the paramagnet.
    ParamagnetAll,
    /// Every Hamiltonian generator.
    Stabilizer,
}

/// Depth of the enforced region measured from `y = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RegionRepr", into = "RegionRepr")]
pub enum Region {
    Width(usize),
    Full,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RegionRepr {
    Int(usize),
    Str(String),
}

impl TryFrom<RegionRepr> for Region {
    type Error = String;

    fn try_from(r: RegionRepr) -> std::result::Result<Self, String> {
        match r {
            RegionRepr::Int(w) => Ok(Region::Width(w)),
            RegionRepr::Str(s) if s == "full" => Ok(Region::Full),
            RegionRepr::Str(s) => Err(format!("W must be an integer or \"full\", got {s:?}")),
        }
    }
}

impl From<Region> for RegionRepr {
    fn from(r: Region) -> Self {
        match r {
            Region::Width(w) => RegionRepr::Int(w),
            Region::Full => RegionRepr::Str("full".into()),
        }
    }
}

impl std::str::FromStr for Region {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "full" {
            return Ok(Region::Full);
        }
        s.parse()
            .map(Region::Width)
            .map_err(|_| Error::Parse(format!("W must be an integer or \"full\", got {s:?}")))
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Region::Width(w) => write!(f, "{w}"),
            Region::Full => f.write_str("full"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymmetrySpec {
    pub family: Family,
    #[serde(rename = "W")]
    pub region: Region,
}

impl SymmetrySpec {
    pub fn new(family: Family, region: Region) -> Self {
        Self { family, region }
    }

    /// No enforced generators.
    pub fn none() -> Self {
        Self::new(Family::Vertex, Region::Width(0))
    }

    /// The natural family for a code: the paramagnet's own symmetry
    /// generators, vertex terms otherwise.
    pub fn default_for(code: &StabilizerCode, region: Region) -> Self {
        let family = match code.model() {
            crate::codes::Model::ParamagnetBulk => Family::ParamagnetAll,
            _ => Family::Vertex,
        };
        Self::new(family, region)
    }
}

fn in_family(family: Family, kind: GeneratorKind) -> bool {
    match family {
        Family::Vertex => matches!(
            kind,
            GeneratorKind::Vertex | GeneratorKind::VertexSigma | GeneratorKind::VertexTau
        ),
        Family::Stabilizer => true,
        Family::ParamagnetAll => matches!(
            kind,
            GeneratorKind::SymVertex
                | GeneratorKind::SymCube
                | GeneratorKind::SymBoundaryVertex
                | GeneratorKind::SymBoundaryCube
        ),
    }
}

/// Largest y reached by the support of a generator.
fn y_extent(code: &StabilizerCode, g: &Generator) -> usize {
    let cx = code.complex();
    g.op.support()
        .into_iter()
        .map(|q| {
            let (p, kind) = cx.cell_pos(code.qubit_index(q).cell);
            p[1] + kind.extent()[1] as usize
        })
        .max()
        .unwrap_or(0)
}

pub fn is_enforced(code: &StabilizerCode, spec: &SymmetrySpec, g: &Generator) -> bool {
    if !in_family(spec.family, g.kind) {
        return false;
    }
    match spec.region {
        Region::Full => true,
        Region::Width(w) => y_extent(code, g) <= w,
    }
}

/// Generators constrained by `spec`: a generator is enforced when its
/// whole support lies in `y <= W`.
pub fn enforced_generators(code: &StabilizerCode, spec: &SymmetrySpec) -> GeneratorSet {
    let source = match spec.family {
        Family::ParamagnetAll => code.symmetry_generators(),
        _ => code.hamiltonian(),
    };
    let gens = source
        .iter()
        .filter(|g| is_enforced(code, spec, g))
        .cloned()
        .collect();
    GeneratorSet::new(code.n_qubits(), gens)
}

pub fn respects_symmetry(enforced: &GeneratorSet, op: &PauliOperator) -> bool {
    enforced.anticommuting(&op.to_sparse()).is_empty()
}

/// Lowest vertex layer `y` with no enforced vertex-type generator; strings
/// may end there. `None` when every layer is enforced.
pub fn first_unenforced_layer(code: &StabilizerCode, enforced: &GeneratorSet) -> Option<usize> {
    let cx = code.complex();
    let top = if cx.has_boundary() {
        cx.dims()[1]
    } else {
        cx.dims()[1] - 1
    };
    let mut blocked = vec![false; top + 1];
    for g in enforced.iter() {
        if let Cell::Vertex(v) = g.cell {
            blocked[cx.vertex_pos(v)[1]] = true;
        }
    }
    blocked.iter().position(|b| !b)
}

/// Basis of operators supported in the ball around `center` that commute
/// with every enforced generator, sparsified greedily.
pub fn local_basis(
    code: &StabilizerCode,
    enforced: &GeneratorSet,
    center: [usize; 3],
    radius: usize,
) -> Vec<SparsePauli> {
    let cx = code.complex();
    let ball: Vec<u32> = (0..code.n_qubits() as u32)
        .filter(|&q| cx.in_ball(center, radius, code.qubit_index(q).cell))
        .collect();
    let m = ball.len();
    let col: HashMap<u32, usize> = ball.iter().enumerate().map(|(i, &q)| (q, i)).collect();
    let mut touched: Vec<u32> = ball
        .iter()
        .flat_map(|&q| enforced.at_qubit(q).iter().copied())
        .collect();
    touched.sort_unstable();
    touched.dedup();
    let rows: Vec<BitVec> = touched
        .iter()
        .map(|&g| {
            let g = &enforced.get(g as usize).op;
            let mut row = BitVec::zeros(2 * m);
            for q in &g.z {
                if let Some(&j) = col.get(q) {
                    row.flip(j);
                }
            }
            for q in &g.x {
                if let Some(&j) = col.get(q) {
                    row.flip(m + j);
                }
            }
            row
        })
        .collect();
    let mut basis = nullspace(2 * m, &rows);
    if !touched.is_empty() {
        sparsify(&mut basis);
    }
    basis
        .into_iter()
        .map(|v| {
            let xs = v.iter_ones().filter(|&j| j < m).map(|j| ball[j]).collect();
            let zs = v.iter_ones().filter(|&j| j >= m).map(|j| ball[j - m]).collect();
            SparsePauli::from_lists(xs, zs)
        })
        .collect()
}

/// Symmetric local moves around one vertex.
pub fn allowed_local_moves(
    code: &StabilizerCode,
    spec: &SymmetrySpec,
    center: VertexId,
    radius: usize,
) -> Vec<PauliOperator> {
    let enforced = enforced_generators(code, spec);
    let c = code.complex().vertex_pos(center);
    local_basis(code, &enforced, c, radius)
        .into_iter()
        .map(|m| m.to_dense(code.n_qubits()))
        .collect()
}

#[derive(Clone, Debug)]
pub struct Move {
    pub op: SparsePauli,
    /// Hamiltonian generators that anticommute with the move.
    pub footprint: Vec<u32>,
}

/// All (center, basis element) pairs over every vertex of the complex.
#[derive(Clone, Debug)]
pub struct MoveSet {
    spec: SymmetrySpec,
    radius: usize,
    moves: Vec<Move>,
}

impl MoveSet {
    /// Bases are computed once per y-layer of centers and translated along
    /// the periodic x and z directions.
    pub fn build(code: &StabilizerCode, spec: &SymmetrySpec, radius: usize) -> Result<Self> {
        let cx = code.complex();
        let enforced = enforced_generators(code, spec);
        let ny = if cx.has_boundary() {
            cx.dims()[1] + 1
        } else {
            cx.dims()[1]
        };
        let per_layer: Vec<Vec<SparsePauli>> = (0..ny)
            .into_par_iter()
            .map(|y| local_basis(code, &enforced, [0, y, 0], radius))
            .collect();
        let moves: Vec<Move> = cx
            .vertices()
            .collect::<Vec<_>>()
            .par_iter()
            .flat_map_iter(|&v| {
                let p = cx.vertex_pos(v);
                per_layer[p[1]]
                    .iter()
                    .map(move |m| {
                        let (dx, dz) = (p[0] as i64, p[2] as i64);
                        let op = SparsePauli::from_lists(
                            m.x.iter().map(|&q| code.translate_qubit(q, dx, dz)).collect(),
                            m.z.iter().map(|&q| code.translate_qubit(q, dx, dz)).collect(),
                        );
                        let footprint = code.hamiltonian().anticommuting(&op);
                        Move { op, footprint }
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        if moves.is_empty() {
            return Err(Error::EmptyMoveSet);
        }
        Ok(Self {
            spec: *spec,
            radius,
            moves,
        })
    }

    pub fn spec(&self) -> &SymmetrySpec {
        &self.spec
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn get(&self, i: usize) -> &Move {
        &self.moves[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Move> {
        self.moves.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build, Model};
    use crate::lattice::Axis;
    use crate::operators::{bare_string, named_operator};
    use crate::codes::Species;

    #[test]
    fn region_serde() {
        let s: SymmetrySpec = serde_json::from_str(r#"{"family":"vertex","W":3}"#).unwrap();
        assert_eq!(s.region, Region::Width(3));
        let s: SymmetrySpec =
            serde_json::from_str(r#"{"family":"paramagnet-all","W":"full"}"#).unwrap();
        assert_eq!(s, SymmetrySpec::new(Family::ParamagnetAll, Region::Full));
        assert_eq!(serde_json::to_string(&s).unwrap(), r#"{"family":"paramagnet-all","W":"full"}"#);
        assert!(serde_json::from_str::<SymmetrySpec>(r#"{"family":"vertex","W":"half"}"#).is_err());
    }

    #[test]
    fn enforcement_depth() {
        let c = build(Model::ThreeFermion, &[3, 5, 3]).unwrap();
        let spec = SymmetrySpec::new(Family::Vertex, Region::Width(2));
        let enf = enforced_generators(&c, &spec);
        assert_eq!(enf.len(), 2 * 9 * 2);
        assert_eq!(first_unenforced_layer(&c, &enf), Some(2));
        assert_eq!(enforced_generators(&c, &SymmetrySpec::none()).len(), 0);
        let full = enforced_generators(&c, &SymmetrySpec::new(Family::Vertex, Region::Full));
        assert_eq!(full.len(), 2 * 9 * 6);
        assert_eq!(first_unenforced_layer(&c, &full), None);
    }

    #[test]
    fn unenforced_moves_are_single_qubit() {
        let c = build(Model::Toric2d, &[5, 5]).unwrap();
        let v = c.complex().vertex_at([2, 2, 0]).unwrap();
        let moves = allowed_local_moves(&c, &SymmetrySpec::none(), v, 1);
        assert_eq!(moves.len(), 2 * 12);
        assert!(moves.iter().all(|m| m.weight() == 1));
    }

    #[test]
    fn enforced_moves_commute_with_enforced_generators() {
        let c = build(Model::ThreeFermion, &[4, 3, 4]).unwrap();
        let spec = SymmetrySpec::new(Family::Vertex, Region::Full);
        let enf = enforced_generators(&c, &spec);
        let v = c.complex().vertex_at([1, 1, 1]).unwrap();
        let moves = allowed_local_moves(&c, &spec, v, 1);
        assert!(!moves.is_empty());
        for m in &moves {
            assert!(respects_symmetry(&enf, m));
        }
        // An open sigma^z segment violates the vertex symmetry.
        let seg = c.complex().straight_chain([1, 1, 1], Axis::X, 1).unwrap();
        assert!(!respects_symmetry(&enf, &bare_string(&c, &seg, Species::Sigma).unwrap()));
        assert!(respects_symmetry(&enf, &named_operator(&c, "Rsigma-horiz").unwrap()));
    }

    #[test]
    fn translated_moves_match_direct_computation() {
        let c = build(Model::ThreeFermion, &[4, 3, 4]).unwrap();
        let spec = SymmetrySpec::new(Family::Vertex, Region::Width(2));
        let set = MoveSet::build(&c, &spec, 1).unwrap();
        let enf = enforced_generators(&c, &spec);
        let v = c.complex().vertex_at([2, 1, 3]).unwrap();
        let direct = local_basis(&c, &enf, [2, 1, 3], 1);
        let n = c.n_qubits();
        let mut a = crate::gf2::Reducer::new(2 * n);
        for m in &direct {
            a.insert(m.to_dense(n).symplectic());
        }
        let per_center = direct.len();
        let start = c.complex().vertices().position(|u| u == v).unwrap();
        let before: usize = c
            .complex()
            .vertices()
            .take(start)
            .map(|u| {
                let p = c.complex().vertex_pos(u);
                local_basis(&c, &enf, [0, p[1], 0], 1).len()
            })
            .sum();
        for m in set.iter().skip(before).take(per_center) {
            assert!(a.contains(&m.op.to_dense(n).symplectic()));
            assert_eq!(m.footprint, c.hamiltonian().anticommuting(&m.op));
        }
    }
}
