//! Stabilizer codes on cell complexes.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gf2::{BitVec, Reducer};
use crate::lattice::{Cell, CellComplex, EdgeId, FaceId, Side, Topology, VertexId};
use crate::pauli::{PauliOperator, SparsePauli};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Model {
    #[serde(rename = "toric2d")]
    Toric2d,
    #[serde(rename = "toric3d")]
    Toric3d,
    #[serde(rename = "3d3f")]
    ThreeFermion,
    #[serde(rename = "parabulk")]
    ParamagnetBulk,
}

impl Model {
    pub const ALL: [Model; 4] = [
        Model::Toric2d,
        Model::Toric3d,
        Model::ThreeFermion,
        Model::ParamagnetBulk,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Model::Toric2d => "toric2d",
            Model::Toric3d => "toric3d",
            Model::ThreeFermion => "3d3f",
            Model::ParamagnetBulk => "parabulk",
        }
    }

    pub fn topology(self) -> Topology {
        match self {
            Model::Toric2d => Topology::Torus2,
            Model::Toric3d => Topology::Torus3,
            Model::ThreeFermion | Model::ParamagnetBulk => Topology::Slab,
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Model::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown model {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Species {
    Single,
    Sigma,
    Tau,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QubitIndex {
    pub cell: Cell,
    pub species: Species,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorKind {
    /// Toric code star.
    Vertex,
    /// Toric code plaquette.
    Face,
    VertexSigma,
    VertexTau,
    FaceSigma,
    FaceTau,
    /// Single-site X on a bulk edge of the paramagnet.
    ParaEdge,
    /// Single-site X on a bulk face of the paramagnet.
    ParaFace,
    BoundaryVertex,
    BoundaryFace,
    SymVertex,
    SymCube,
    SymBoundaryVertex,
    SymBoundaryCube,
}

impl GeneratorKind {
    pub fn is_vertex_term(self) -> bool {
        matches!(
            self,
            GeneratorKind::Vertex
                | GeneratorKind::VertexSigma
                | GeneratorKind::VertexTau
                | GeneratorKind::BoundaryVertex
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub cell: Cell,
    pub op: SparsePauli,
}

/// Ordered generator list with a qubit-to-generator index.
#[derive(Clone, Debug, Default)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
    offsets: Vec<u32>,
    by_qubit: Vec<u32>,
}

impl GeneratorSet {
    pub fn new(n_qubits: usize, gens: Vec<Generator>) -> Self {
        let mut counts = vec![0u32; n_qubits + 1];
        for g in &gens {
            for q in g.op.support() {
                counts[q as usize + 1] += 1;
            }
        }
        for i in 0..n_qubits {
            counts[i + 1] += counts[i];
        }
        let mut fill = counts.clone();
        let mut by_qubit = vec![0u32; counts[n_qubits] as usize];
        for (i, g) in gens.iter().enumerate() {
            for q in g.op.support() {
                by_qubit[fill[q as usize] as usize] = i as u32;
                fill[q as usize] += 1;
            }
        }
        Self {
            gens,
            offsets: counts,
            by_qubit,
        }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.gens.iter()
    }

    /// Generators whose support contains `q`.
    pub fn at_qubit(&self, q: u32) -> &[u32] {
        let q = q as usize;
        &self.by_qubit[self.offsets[q] as usize..self.offsets[q + 1] as usize]
    }

    /// Sorted indices of generators anticommuting with `op`.
    pub fn anticommuting(&self, op: &SparsePauli) -> Vec<u32> {
        let mut cand: Vec<u32> = op
            .x
            .iter()
            .chain(&op.z)
            .flat_map(|&q| self.at_qubit(q).iter().copied())
            .collect();
        cand.sort_unstable();
        cand.dedup();
        cand.retain(|&g| {
            let g = &self.gens[g as usize].op;
            let a = op.x.iter().filter(|&&q| g.z_at(q)).count();
            let b = op.z.iter().filter(|&&q| g.x_at(q)).count();
            (a + b) % 2 == 1
        });
        cand
    }

    pub fn syndrome(&self, op: &PauliOperator) -> BitVec {
        BitVec::from_indices(
            self.len(),
            self.anticommuting(&op.to_sparse())
                .into_iter()
                .map(|g| g as usize),
        )
    }

    /// Pairs `(i, j)` with `i < j` of anticommuting generators.
    pub fn anticommuting_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            for j in self.anticommuting(&g.op) {
                if (j as usize) > i {
                    out.push((i, j as usize));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerCode {
    model: Model,
    complex: Arc<CellComplex>,
    qubits: Vec<QubitIndex>,
    lookup: HashMap<QubitIndex, u32>,
    hamiltonian: GeneratorSet,
    symmetry: GeneratorSet,
    decorated: bool,
}

impl StabilizerCode {
    pub fn model(&self) -> Model {
        self.model
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn n_qubits(&self) -> usize {
        self.qubits.len()
    }

    pub fn qubit_index(&self, q: u32) -> QubitIndex {
        self.qubits[q as usize]
    }

    pub fn qubits(&self) -> &[QubitIndex] {
        &self.qubits
    }

    pub fn qubit(&self, cell: Cell, species: Species) -> Option<u32> {
        self.lookup.get(&QubitIndex { cell, species }).copied()
    }

    pub fn edge_qubit(&self, e: EdgeId, species: Species) -> Option<u32> {
        self.qubit(Cell::Edge(e), species)
    }

    pub fn face_qubit(&self, f: FaceId) -> Option<u32> {
        self.qubit(Cell::Face(f), Species::Single)
    }

    /// Hamiltonian generators, in the canonical order.
    pub fn hamiltonian(&self) -> &GeneratorSet {
        &self.hamiltonian
    }

    /// Symmetry generators that are not Hamiltonian terms (paramagnet only).
    pub fn symmetry_generators(&self) -> &GeneratorSet {
        &self.symmetry
    }

    pub fn is_decorated(&self) -> bool {
        self.decorated
    }

    pub fn generator_ops(&self) -> Vec<PauliOperator> {
        self.hamiltonian
            .iter()
            .map(|g| g.op.to_dense(self.n_qubits()))
            .collect()
    }

    /// Translate a qubit by `(dx, 0, dz)`.
    pub fn translate_qubit(&self, q: u32, dx: i64, dz: i64) -> u32 {
        let qi = self.qubits[q as usize];
        let cell = self.complex.translate(qi.cell, dx, dz);
        self.qubit(cell, qi.species)
            .expect("translated qubit exists")
    }

    pub fn syndrome(&self, op: &PauliOperator) -> BitVec {
        self.hamiltonian.syndrome(op)
    }

    pub fn energy(&self, op: &PauliOperator) -> usize {
        self.hamiltonian.anticommuting(&op.to_sparse()).len()
    }

    /// GF(2) rank of the Hamiltonian generators.
    pub fn rank(&self) -> usize {
        self.stabilizer_reducer().rank()
    }

    /// Reduced basis of the stabilizer group in symplectic coordinates.
    pub fn stabilizer_reducer(&self) -> Reducer {
        let n = self.n_qubits();
        let mut red = Reducer::new(2 * n);
        for g in self.hamiltonian.iter() {
            red.insert(g.op.to_dense(n).symplectic());
        }
        red
    }

    pub fn logical_qubit_count(&self) -> usize {
        self.n_qubits() - self.rank()
    }

    /// Logical qubits carried by the toric code on one boundary plane,
    /// computed as `n_b - rank` of the boundary-only generators.
    pub fn boundary_logical_count(&self, side: Side) -> Option<usize> {
        if self.model != Model::ParamagnetBulk {
            return None;
        }
        let cx = &self.complex;
        let qs: Vec<u32> = (0..self.n_qubits() as u32)
            .filter(|&q| cx.boundary_side(self.qubits[q as usize].cell) == Some(side))
            .collect();
        let pos: HashMap<u32, usize> = qs.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let nb = qs.len();
        let mut red = Reducer::new(2 * nb);
        for g in self.hamiltonian.iter() {
            let s = g.op.support();
            if s.is_empty() || !s.iter().all(|q| pos.contains_key(q)) {
                continue;
            }
            let mut v = BitVec::zeros(2 * nb);
            for q in &g.op.x {
                v.flip(pos[q]);
            }
            for q in &g.op.z {
                v.flip(nb + pos[q]);
            }
            red.insert(v);
        }
        Some(nb - red.rank())
    }

    /// A symplectic basis `(X_i, Z_i)` of logical operators.
    pub fn extract_logicals(&self) -> Vec<(PauliOperator, PauliOperator)> {
        let n = self.n_qubits();
        let rows: Vec<BitVec> = self
            .hamiltonian
            .iter()
            .map(|g| g.op.to_dense(n).symplectic_dual())
            .collect();
        let normalizer = crate::gf2::nullspace(2 * n, &rows);
        let mut stab = self.stabilizer_reducer();
        let mut reps: Vec<PauliOperator> = Vec::new();
        for v in normalizer {
            if stab.insert(v.clone()) {
                reps.push(PauliOperator::from_symplectic(&v));
            }
        }
        symplectic_gram_schmidt(reps)
    }

    /// SHA-256 over the model, dimensions and serialized generators.
    pub fn fixture_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.model.name().as_bytes());
        for d in self.complex.info().dims {
            h.update(format!(":{d}").as_bytes());
        }
        h.update(if self.decorated { ":dec" } else { ":bare" });
        for set in [&self.hamiltonian, &self.symmetry] {
            h.update(b"\n#");
            for g in set.iter() {
                h.update(g.op.to_dense(self.n_qubits()).to_hex().as_bytes());
                h.update(b"\n");
            }
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Pair up logical representatives into anticommuting `(X, Z)` pairs that
/// commute across pairs.
pub fn symplectic_gram_schmidt(mut pool: Vec<PauliOperator>) -> Vec<(PauliOperator, PauliOperator)> {
    let mut pairs = Vec::new();
    while let Some(a) = pool.pop() {
        let Some(j) = pool.iter().position(|b| !a.commutes(b)) else {
            continue;
        };
        let b = pool.swap_remove(j);
        for c in pool.iter_mut() {
            let ca = !c.commutes(&a);
            let cb = !c.commutes(&b);
            if cb {
                c.mul_assign(&a);
            }
            if ca {
                c.mul_assign(&b);
            }
        }
        pairs.push((a, b));
    }
    pairs
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutationReport {
    pub hamiltonian: bool,
    pub symmetry_with_hamiltonian: bool,
    pub symmetry_internal: bool,
    pub first_violation: Option<(usize, usize)>,
}

impl CommutationReport {
    pub fn all_commute(&self) -> bool {
        self.hamiltonian && self.symmetry_with_hamiltonian && self.symmetry_internal
    }
}

pub fn check_commutation(code: &StabilizerCode) -> CommutationReport {
    let h = code.hamiltonian.anticommuting_pairs();
    let sh: Vec<(usize, usize)> = code
        .symmetry
        .iter()
        .enumerate()
        .flat_map(|(i, g)| {
            code.hamiltonian
                .anticommuting(&g.op)
                .into_iter()
                .map(move |j| (i, j as usize))
        })
        .collect();
    let ss = code.symmetry.anticommuting_pairs();
    CommutationReport {
        hamiltonian: h.is_empty(),
        symmetry_with_hamiltonian: sh.is_empty(),
        symmetry_internal: ss.is_empty(),
        first_violation: h.first().or(sh.first()).or(ss.first()).copied(),
    }
}

struct Layout {
    qubits: Vec<QubitIndex>,
    lookup: HashMap<QubitIndex, u32>,
}

impl Layout {
    fn new(qubits: Vec<QubitIndex>) -> Self {
        let lookup = qubits
            .iter()
            .enumerate()
            .map(|(i, &q)| (q, i as u32))
            .collect();
        Self { qubits, lookup }
    }

    fn q(&self, cell: Cell, species: Species) -> Option<u32> {
        self.lookup.get(&QubitIndex { cell, species }).copied()
    }

    fn edge(&self, e: Option<EdgeId>, species: Species) -> Option<u32> {
        e.and_then(|e| self.q(Cell::Edge(e), species))
    }
}

fn finish(
    model: Model,
    complex: CellComplex,
    layout: Layout,
    gens: Vec<Generator>,
    sym: Vec<Generator>,
    decorated: bool,
) -> StabilizerCode {
    let n = layout.qubits.len();
    StabilizerCode {
        model,
        complex: Arc::new(complex),
        qubits: layout.qubits,
        lookup: layout.lookup,
        hamiltonian: GeneratorSet::new(n, gens),
        symmetry: GeneratorSet::new(n, sym),
        decorated,
    }
}

fn vertex_x(cx: &CellComplex, lay: &Layout, v: VertexId, sp: Species) -> SparsePauli {
    let xs = cx
        .vertex_coboundary(v)
        .filter_map(|e| lay.q(Cell::Edge(e), sp))
        .collect();
    SparsePauli::from_lists(xs, vec![])
}

fn face_z(cx: &CellComplex, lay: &Layout, f: FaceId, sp: Species) -> Vec<u32> {
    cx.face_edges(f)
        .into_iter()
        .filter_map(|e| lay.q(Cell::Edge(e), sp))
        .collect()
}

/// Build a model on its default topology.
pub fn build(model: Model, dims: &[usize]) -> Result<StabilizerCode> {
    let cx = CellComplex::new(model.topology(), dims)?;
    match model {
        Model::Toric2d | Model::Toric3d => toric(cx),
        Model::ThreeFermion => three_fermion(cx, true),
        Model::ParamagnetBulk => paramagnet_bulk(cx),
    }
}

/// Toric code with one qubit per edge on a periodic complex.
pub fn toric(cx: CellComplex) -> Result<StabilizerCode> {
    let model = match cx.topology() {
        Topology::Torus2 => Model::Toric2d,
        Topology::Torus3 => Model::Toric3d,
        Topology::Slab => {
            return Err(Error::Topology(
                "single-species toric code is built on periodic complexes".into(),
            ))
        }
    };
    let lay = Layout::new(
        cx.edges()
            .map(|e| QubitIndex {
                cell: Cell::Edge(e),
                species: Species::Single,
            })
            .collect(),
    );
    let mut gens: Vec<Generator> = cx
        .vertices()
        .map(|v| Generator {
            kind: GeneratorKind::Vertex,
            cell: Cell::Vertex(v),
            op: vertex_x(&cx, &lay, v, Species::Single),
        })
        .collect();
    gens.extend(cx.faces().map(|f| Generator {
        kind: GeneratorKind::Face,
        cell: Cell::Face(f),
        op: SparsePauli::from_lists(vec![], face_z(&cx, &lay, f, Species::Single)),
    }));
    Ok(finish(model, cx, lay, gens, vec![], false))
}

fn two_species_layout(cx: &CellComplex) -> Layout {
    Layout::new(
        [Species::Sigma, Species::Tau]
            .into_iter()
            .flat_map(|species| {
                cx.edges().map(move |e| QubitIndex {
                    cell: Cell::Edge(e),
                    species,
                })
            })
            .collect(),
    )
}

/// Walker-Wang model for the three-fermion theory: two qubits per edge,
/// vertex terms `A^sigma`, `A^tau` and decorated plaquettes `B^sigma`,
/// `B^tau`. With `decorated = false` the plaquettes lose their X legs and
/// the model is two copies of the 3d toric code.
pub fn three_fermion(cx: CellComplex, decorated: bool) -> Result<StabilizerCode> {
    if !cx.is_3d() {
        return Err(Error::Topology("the 3d3f model needs a 3d complex".into()));
    }
    let lay = two_species_layout(&cx);
    let (s, t) = (Species::Sigma, Species::Tau);
    let mut gens = Vec::new();
    for v in cx.vertices() {
        for (kind, sp) in [(GeneratorKind::VertexSigma, s), (GeneratorKind::VertexTau, t)] {
            gens.push(Generator {
                kind,
                cell: Cell::Vertex(v),
                op: vertex_x(&cx, &lay, v, sp),
            });
        }
    }
    for f in cx.faces() {
        let (o, u) = if decorated {
            cx.over_under(f)
        } else {
            (None, None)
        };
        let sx: Vec<u32> = [lay.edge(o, s), lay.edge(u, s), lay.edge(u, t)]
            .into_iter()
            .flatten()
            .collect();
        gens.push(Generator {
            kind: GeneratorKind::FaceSigma,
            cell: Cell::Face(f),
            op: SparsePauli::from_lists(sx, face_z(&cx, &lay, f, s)),
        });
        let tx: Vec<u32> = [lay.edge(o, s), lay.edge(o, t), lay.edge(u, t)]
            .into_iter()
            .flatten()
            .collect();
        gens.push(Generator {
            kind: GeneratorKind::FaceTau,
            cell: Cell::Face(f),
            op: SparsePauli::from_lists(tx, face_z(&cx, &lay, f, t)),
        });
    }
    let model = if decorated {
        Model::ThreeFermion
    } else {
        match cx.topology() {
            Topology::Torus3 => Model::Toric3d,
            _ => Model::ThreeFermion,
        }
    };
    Ok(finish(model, cx, lay, gens, vec![], decorated))
}

/// Paramagnet in the bulk of the slab with a toric code on each boundary
/// plane. Bulk qubits live on edges and faces off the boundary planes;
/// boundary qubits on the edges inside them.
pub fn paramagnet_bulk(cx: CellComplex) -> Result<StabilizerCode> {
    if cx.topology() != Topology::Slab {
        return Err(Error::Topology(
            "the paramagnet-bulk model is defined on the slab".into(),
        ));
    }
    let sp = Species::Single;
    let mut qubits: Vec<QubitIndex> = cx
        .edges()
        .map(|e| QubitIndex {
            cell: Cell::Edge(e),
            species: sp,
        })
        .collect();
    qubits.extend(
        cx.faces()
            .filter(|&f| cx.boundary_side(Cell::Face(f)).is_none())
            .map(|f| QubitIndex {
                cell: Cell::Face(f),
                species: sp,
            }),
    );
    let lay = Layout::new(qubits);
    let on_boundary = |c: Cell| cx.boundary_side(c).is_some();

    let mut gens = Vec::new();
    for v in cx.vertices().filter(|&v| on_boundary(Cell::Vertex(v))) {
        let xs = cx
            .vertex_coboundary(v)
            .filter(|&e| on_boundary(Cell::Edge(e)))
            .filter_map(|e| lay.q(Cell::Edge(e), sp))
            .collect();
        gens.push(Generator {
            kind: GeneratorKind::BoundaryVertex,
            cell: Cell::Vertex(v),
            op: SparsePauli::from_lists(xs, vec![]),
        });
    }
    for e in cx.edges().filter(|&e| !on_boundary(Cell::Edge(e))) {
        gens.push(Generator {
            kind: GeneratorKind::ParaEdge,
            cell: Cell::Edge(e),
            op: SparsePauli::from_lists(vec![lay.q(Cell::Edge(e), sp).unwrap()], vec![]),
        });
    }
    for f in cx.faces().filter(|&f| !on_boundary(Cell::Face(f))) {
        gens.push(Generator {
            kind: GeneratorKind::ParaFace,
            cell: Cell::Face(f),
            op: SparsePauli::from_lists(vec![lay.q(Cell::Face(f), sp).unwrap()], vec![]),
        });
    }
    for f in cx.faces().filter(|&f| on_boundary(Cell::Face(f))) {
        gens.push(Generator {
            kind: GeneratorKind::BoundaryFace,
            cell: Cell::Face(f),
            op: SparsePauli::from_lists(vec![], face_z(&cx, &lay, f, sp)),
        });
    }

    let mut sym = Vec::new();
    for v in cx.vertices() {
        let kind = if on_boundary(Cell::Vertex(v)) {
            GeneratorKind::SymBoundaryVertex
        } else {
            GeneratorKind::SymVertex
        };
        sym.push(Generator {
            kind,
            cell: Cell::Vertex(v),
            op: vertex_x(&cx, &lay, v, sp),
        });
    }
    for c in cx.cubes() {
        let faces = cx.cube_faces(c);
        let f0 = faces.iter().find(|&&f| on_boundary(Cell::Face(f)));
        let xs: Vec<u32> = faces
            .iter()
            .filter_map(|&f| lay.q(Cell::Face(f), sp))
            .collect();
        let (kind, zs) = match f0 {
            Some(&f0) => (GeneratorKind::SymBoundaryCube, face_z(&cx, &lay, f0, sp)),
            None => (GeneratorKind::SymCube, vec![]),
        };
        sym.push(Generator {
            kind,
            cell: Cell::Cube(c),
            op: SparsePauli::from_lists(xs, zs),
        });
    }
    Ok(finish(Model::ParamagnetBulk, cx, lay, gens, sym, false))
}

/// Two copies of the toric code on any 3d complex, one per species.
pub fn doubled_toric(cx: CellComplex) -> Result<StabilizerCode> {
    three_fermion(cx, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Axis;

    #[test]
    fn toric2d_counts() {
        let c = build(Model::Toric2d, &[3, 4]).unwrap();
        assert_eq!(c.n_qubits(), 24);
        assert_eq!(c.hamiltonian().len(), 24);
        assert!(check_commutation(&c).all_commute());
        assert_eq!(c.logical_qubit_count(), 2);
    }

    #[test]
    fn bulk_plaquette_weight() {
        let c = build(Model::ThreeFermion, &[3, 3, 3]).unwrap();
        let cx = c.complex();
        let f = cx.face_at([1, 1, 1], Axis::Z).unwrap();
        let g = c
            .hamiltonian()
            .iter()
            .find(|g| g.cell == Cell::Face(f) && g.kind == GeneratorKind::FaceSigma)
            .unwrap();
        assert_eq!(g.op.support().len(), 7);
        assert_eq!(g.op.x.len() + g.op.z.len(), 7);
    }

    #[test]
    fn right_boundary_plaquette_loses_over_leg() {
        let c = build(Model::ThreeFermion, &[3, 3, 3]).unwrap();
        let cx = c.complex();
        let f = cx.face_at([0, 0, 0], Axis::Y).unwrap();
        let (o, u) = cx.over_under(f);
        assert!(o.is_none());
        let u = c.edge_qubit(u.unwrap(), Species::Sigma).unwrap();
        let g = c
            .hamiltonian()
            .iter()
            .find(|g| g.cell == Cell::Face(f) && g.kind == GeneratorKind::FaceSigma)
            .unwrap();
        assert_eq!(g.op.x, vec![u, u + cx.n_edges() as u32]);
    }

    #[test]
    fn decorations_stripped_equals_doubled_toric() {
        let cx = CellComplex::slab(3, 2, 3).unwrap();
        let a = three_fermion(cx.clone(), false).unwrap();
        let b = doubled_toric(cx).unwrap();
        assert_eq!(a.generator_ops(), b.generator_ops());
        let full = build(Model::ThreeFermion, &[3, 2, 3]).unwrap();
        for (g, h) in full.hamiltonian().iter().zip(a.hamiltonian().iter()) {
            assert_eq!(g.kind, h.kind);
            assert_eq!(g.op.z, h.op.z);
        }
    }

    #[test]
    fn gram_schmidt_pairs() {
        let c = build(Model::Toric2d, &[3, 3]).unwrap();
        let pairs = c.extract_logicals();
        assert_eq!(pairs.len(), 2);
        let stab = c.stabilizer_reducer();
        for (i, (x, z)) in pairs.iter().enumerate() {
            assert!(!x.commutes(z));
            assert!(c.syndrome(x).is_zero() && c.syndrome(z).is_zero());
            assert!(!stab.contains(&x.symplectic()));
            for (j, (x2, z2)) in pairs.iter().enumerate() {
                if i != j {
                    assert!(x.commutes(x2) && x.commutes(z2) && z.commutes(z2));
                }
            }
        }
    }

    #[test]
    fn model_names_parse() {
        for m in Model::ALL {
            assert_eq!(m.name().parse::<Model>().unwrap(), m);
        }
        assert!("4d".parse::<Model>().is_err());
    }

    #[test]
    fn fixture_hash_is_stable() {
        let a = build(Model::ThreeFermion, &[2, 2, 2]).unwrap();
        let b = build(Model::ThreeFermion, &[2, 2, 2]).unwrap();
        assert_eq!(a.fixture_hash(), b.fixture_hash());
        assert_eq!(a.fixture_hash().len(), 64);
        let c = build(Model::ThreeFermion, &[2, 3, 2]).unwrap();
        assert_ne!(a.fixture_hash(), c.fixture_hash());
    }
}
