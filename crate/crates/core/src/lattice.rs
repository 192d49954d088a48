//! Cubic cell complexes: the 2-torus, the 3-torus and the slab `T^2 x I`.
//!
//! Coordinates are `(x, y, z)`. In the slab, `x` and `z` are periodic and
//! `y` runs over `0..=L_y`; the plane `y = 0` is the right boundary and
//! `y = L_y` the left one. Cells are labelled by their lower corner and
//! numbered row-major (x fastest, then y, then z) inside one block per cell
//! type.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Axis {
        Axis::ALL[i]
    }

    pub fn unit(self) -> [i64; 3] {
        let mut u = [0; 3];
        u[self.index()] = 1;
        u
    }

    /// The two other axes, in increasing order.
    pub fn others(self) -> (Axis, Axis) {
        match self {
            Axis::X => (Axis::Y, Axis::Z),
            Axis::Y => (Axis::X, Axis::Z),
            Axis::Z => (Axis::X, Axis::Y),
        }
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z"][self.index()]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Topology {
    /// Periodic 2d square lattice.
    Torus2,
    /// Periodic cubic lattice.
    Torus3,
    /// Periodic in x and z, open in y.
    Slab,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexId(pub u32);
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeId(pub u32);
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceId(pub u32);
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CubeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Cell {
    Vertex(VertexId),
    Edge(EdgeId),
    Face(FaceId),
    Cube(CubeId),
}

/// Cell type; faces are labelled by their normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    Vertex,
    Edge(Axis),
    Face(Axis),
    Cube,
}

impl CellKind {
    /// Axes along which the cell has unit extent.
    pub fn extent(self) -> [bool; 3] {
        match self {
            CellKind::Vertex => [false; 3],
            CellKind::Edge(a) => {
                let mut e = [false; 3];
                e[a.index()] = true;
                e
            }
            CellKind::Face(n) => {
                let mut e = [true; 3];
                e[n.index()] = false;
                e
            }
            CellKind::Cube => [true; 3],
        }
    }
}

/// Boundary plane of the slab.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `y = 0`.
    Right,
    /// `y = L_y`.
    Left,
}

/// Leg of a face (or of an edge's decoration) in the chosen projection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Leg {
    Over,
    Under,
}

/// Viewing direction signs used to resolve over/under crossings.
pub const VIEW: [i64; 3] = [1, -1, -1];
pub const PROJECTION_TAG: &str = "view(+x,-y,-z)";

#[derive(Clone, Copy, Debug)]
struct Block {
    shape: [usize; 3],
    offset: usize,
    count: usize,
    present: bool,
}

impl Block {
    fn index(&self, p: [usize; 3]) -> usize {
        self.offset + p[0] + self.shape[0] * (p[1] + self.shape[1] * p[2])
    }

    fn position(&self, id: usize) -> [usize; 3] {
        let mut r = id - self.offset;
        let x = r % self.shape[0];
        r /= self.shape[0];
        let y = r % self.shape[1];
        [x, y, r / self.shape[1]]
    }

    fn contains(&self, id: usize) -> bool {
        self.present && id >= self.offset && id < self.offset + self.count
    }
}

/// Coboundary lists in compressed row form.
#[derive(Clone, Debug, Default)]
struct Csr {
    offsets: Vec<u32>,
    items: Vec<u32>,
}

impl Csr {
    fn build(n: usize, pairs: impl Iterator<Item = (usize, u32)> + Clone) -> Self {
        let mut counts = vec![0u32; n + 1];
        for (i, _) in pairs.clone() {
            counts[i + 1] += 1;
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let mut fill = counts.clone();
        let mut items = vec![0u32; counts[n] as usize];
        for (i, v) in pairs {
            items[fill[i] as usize] = v;
            fill[i] += 1;
        }
        Self {
            offsets: counts,
            items,
        }
    }

    fn row(&self, i: usize) -> &[u32] {
        &self.items[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }
}

/// Summary used by `build --dump` and report headers.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexInfo {
    pub topology: Topology,
    pub dims: Vec<usize>,
    pub boundary: Vec<String>,
    pub projection: String,
    pub n_vertices: usize,
    pub n_edges: usize,
    pub n_faces: usize,
    pub n_cubes: usize,
}

#[derive(Clone, Debug)]
pub struct CellComplex {
    topology: Topology,
    dims: [usize; 3],
    periodic: [bool; 3],
    vertex_block: Block,
    edge_blocks: [Block; 3],
    face_blocks: [Block; 3],
    cube_block: Block,
    vertex_cob: Csr,
    edge_cob: Csr,
    face_cob: Csr,
}

impl CellComplex {
    /// Build a complex from a topology and its side lengths (two for the
    /// 2-torus, three otherwise, ordered `L_x, L_y, L_z`).
    pub fn new(topology: Topology, dims: &[usize]) -> Result<Self> {
        let want = if topology == Topology::Torus2 { 2 } else { 3 };
        if dims.len() != want {
            return Err(Error::Dimension {
                expected: want,
                found: dims.len(),
            });
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::Size(format!("side length {d} is below 2")));
        }
        let l = [dims[0], dims[1], dims.get(2).copied().unwrap_or(1)];
        let periodic = [true, topology != Topology::Slab, true];
        let three_d = topology != Topology::Torus2;

        let mut next = 0;
        let block = |kind: CellKind, next: &mut usize| -> Block {
            let ext = kind.extent();
            let present = match kind {
                CellKind::Edge(Axis::Z) | CellKind::Cube => three_d,
                CellKind::Face(n) => three_d || n == Axis::Z,
                _ => true,
            };
            let mut shape = [0; 3];
            for i in 0..3 {
                shape[i] = if ext[i] || periodic[i] { l[i] } else { l[i] + 1 };
            }
            let count = if present { shape.iter().product() } else { 0 };
            let b = Block {
                shape,
                offset: *next,
                count,
                present,
            };
            *next += count;
            b
        };
        let vertex_block = block(CellKind::Vertex, &mut next);
        next = 0;
        let edge_blocks = Axis::ALL.map(|a| block(CellKind::Edge(a), &mut next));
        next = 0;
        let face_blocks = Axis::ALL.map(|a| block(CellKind::Face(a), &mut next));
        next = 0;
        let cube_block = block(CellKind::Cube, &mut next);

        let mut cx = Self {
            topology,
            dims: l,
            periodic,
            vertex_block,
            edge_blocks,
            face_blocks,
            cube_block,
            vertex_cob: Csr::default(),
            edge_cob: Csr::default(),
            face_cob: Csr::default(),
        };
        let ev: Vec<(usize, u32)> = cx
            .edges()
            .flat_map(|e| cx.edge_vertices(e).map(|v| (v.0 as usize, e.0)))
            .collect();
        cx.vertex_cob = Csr::build(cx.n_vertices(), ev.into_iter());
        let fe: Vec<(usize, u32)> = cx
            .faces()
            .flat_map(|f| cx.face_edges(f).map(|e| (e.0 as usize, f.0)))
            .collect();
        cx.edge_cob = Csr::build(cx.n_edges(), fe.into_iter());
        let cf: Vec<(usize, u32)> = cx
            .cubes()
            .flat_map(|c| cx.cube_faces(c).map(|f| (f.0 as usize, c.0)))
            .collect();
        cx.face_cob = Csr::build(cx.n_faces(), cf.into_iter());
        Ok(cx)
    }

    pub fn torus2(lx: usize, ly: usize) -> Result<Self> {
        Self::new(Topology::Torus2, &[lx, ly])
    }

    pub fn torus3(lx: usize, ly: usize, lz: usize) -> Result<Self> {
        Self::new(Topology::Torus3, &[lx, ly, lz])
    }

    pub fn slab(lx: usize, ly: usize, lz: usize) -> Result<Self> {
        Self::new(Topology::Slab, &[lx, ly, lz])
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    /// Side lengths `[L_x, L_y, L_z]`; `L_z = 1` on the 2-torus.
    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn is_periodic(&self, a: Axis) -> bool {
        self.periodic[a.index()]
    }

    pub fn is_3d(&self) -> bool {
        self.topology != Topology::Torus2
    }

    /// Axes spanned by the complex.
    pub fn axes(&self) -> &'static [Axis] {
        if self.is_3d() {
            &Axis::ALL
        } else {
            &Axis::ALL[..2]
        }
    }

    pub fn has_boundary(&self) -> bool {
        self.topology == Topology::Slab
    }

    pub fn n_vertices(&self) -> usize {
        self.vertex_block.count
    }

    pub fn n_edges(&self) -> usize {
        self.edge_blocks.iter().map(|b| b.count).sum()
    }

    pub fn n_faces(&self) -> usize {
        self.face_blocks.iter().map(|b| b.count).sum()
    }

    pub fn n_cubes(&self) -> usize {
        self.cube_block.count
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n_vertices() as u32).map(VertexId)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.n_edges() as u32).map(EdgeId)
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceId> {
        (0..self.n_faces() as u32).map(FaceId)
    }

    pub fn cubes(&self) -> impl Iterator<Item = CubeId> {
        (0..self.n_cubes() as u32).map(CubeId)
    }

    fn normalize(&self, p: [i64; 3], kind: CellKind) -> Option<[usize; 3]> {
        let ext = kind.extent();
        let mut out = [0; 3];
        for i in 0..3 {
            let l = self.dims[i] as i64;
            out[i] = if self.periodic[i] {
                p[i].rem_euclid(l) as usize
            } else {
                let hi = if ext[i] { l - 1 } else { l };
                if p[i] < 0 || p[i] > hi {
                    return None;
                }
                p[i] as usize
            };
        }
        Some(out)
    }

    pub fn vertex_at(&self, p: [i64; 3]) -> Option<VertexId> {
        let q = self.normalize(p, CellKind::Vertex)?;
        Some(VertexId(self.vertex_block.index(q) as u32))
    }

    pub fn edge_at(&self, p: [i64; 3], axis: Axis) -> Option<EdgeId> {
        let b = &self.edge_blocks[axis.index()];
        if !b.present {
            return None;
        }
        let q = self.normalize(p, CellKind::Edge(axis))?;
        Some(EdgeId(b.index(q) as u32))
    }

    pub fn face_at(&self, p: [i64; 3], normal: Axis) -> Option<FaceId> {
        let b = &self.face_blocks[normal.index()];
        if !b.present {
            return None;
        }
        let q = self.normalize(p, CellKind::Face(normal))?;
        Some(FaceId(b.index(q) as u32))
    }

    pub fn cube_at(&self, p: [i64; 3]) -> Option<CubeId> {
        if !self.cube_block.present {
            return None;
        }
        let q = self.normalize(p, CellKind::Cube)?;
        Some(CubeId(self.cube_block.index(q) as u32))
    }

    pub fn vertex_pos(&self, v: VertexId) -> [usize; 3] {
        self.vertex_block.position(v.0 as usize)
    }

    pub fn edge_pos(&self, e: EdgeId) -> ([usize; 3], Axis) {
        let i = e.0 as usize;
        let a = (0..3)
            .find(|&a| self.edge_blocks[a].contains(i))
            .expect("edge id out of range");
        (self.edge_blocks[a].position(i), Axis::from_index(a))
    }

    pub fn face_pos(&self, f: FaceId) -> ([usize; 3], Axis) {
        let i = f.0 as usize;
        let a = (0..3)
            .find(|&a| self.face_blocks[a].contains(i))
            .expect("face id out of range");
        (self.face_blocks[a].position(i), Axis::from_index(a))
    }

    pub fn cube_pos(&self, c: CubeId) -> [usize; 3] {
        self.cube_block.position(c.0 as usize)
    }

    /// Lower corner and type of any cell.
    pub fn cell_pos(&self, cell: Cell) -> ([usize; 3], CellKind) {
        match cell {
            Cell::Vertex(v) => (self.vertex_pos(v), CellKind::Vertex),
            Cell::Edge(e) => {
                let (p, a) = self.edge_pos(e);
                (p, CellKind::Edge(a))
            }
            Cell::Face(f) => {
                let (p, n) = self.face_pos(f);
                (p, CellKind::Face(n))
            }
            Cell::Cube(c) => (self.cube_pos(c), CellKind::Cube),
        }
    }

    pub fn cell_at(&self, p: [i64; 3], kind: CellKind) -> Option<Cell> {
        match kind {
            CellKind::Vertex => self.vertex_at(p).map(Cell::Vertex),
            CellKind::Edge(a) => self.edge_at(p, a).map(Cell::Edge),
            CellKind::Face(n) => self.face_at(p, n).map(Cell::Face),
            CellKind::Cube => self.cube_at(p).map(Cell::Cube),
        }
    }

    pub fn edge_vertices(&self, e: EdgeId) -> [VertexId; 2] {
        let (p, a) = self.edge_pos(e);
        let p = to_i64(p);
        [
            self.vertex_at(p).expect("edge tail"),
            self.vertex_at(add(p, a.unit())).expect("edge head"),
        ]
    }

    pub fn face_edges(&self, f: FaceId) -> [EdgeId; 4] {
        let (p, n) = self.face_pos(f);
        let (a, b) = n.others();
        let p = to_i64(p);
        [
            self.edge_at(p, a).expect("face edge"),
            self.edge_at(add(p, b.unit()), a).expect("face edge"),
            self.edge_at(p, b).expect("face edge"),
            self.edge_at(add(p, a.unit()), b).expect("face edge"),
        ]
    }

    pub fn cube_faces(&self, c: CubeId) -> [FaceId; 6] {
        let p = to_i64(self.cube_pos(c));
        let mut out = [FaceId(0); 6];
        for (i, n) in Axis::ALL.into_iter().enumerate() {
            out[2 * i] = self.face_at(p, n).expect("cube face");
            out[2 * i + 1] = self.face_at(add(p, n.unit()), n).expect("cube face");
        }
        out
    }

    /// Edges incident to a vertex.
    pub fn vertex_coboundary(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.vertex_cob.row(v.0 as usize).iter().map(|&e| EdgeId(e))
    }

    /// Faces containing an edge.
    pub fn edge_coboundary(&self, e: EdgeId) -> impl Iterator<Item = FaceId> + '_ {
        self.edge_cob.row(e.0 as usize).iter().map(|&f| FaceId(f))
    }

    /// Cubes containing a face.
    pub fn face_coboundary(&self, f: FaceId) -> impl Iterator<Item = CubeId> + '_ {
        self.face_cob.row(f.0 as usize).iter().map(|&c| CubeId(c))
    }

    /// Which boundary plane, if any, contains the cell entirely.
    pub fn boundary_side(&self, cell: Cell) -> Option<Side> {
        if !self.has_boundary() {
            return None;
        }
        let (p, kind) = self.cell_pos(cell);
        if kind.extent()[1] {
            return None;
        }
        if p[1] == 0 {
            Some(Side::Right)
        } else if p[1] == self.dims[1] {
            Some(Side::Left)
        } else {
            None
        }
    }

    pub fn boundary_edges(&self, side: Side) -> Vec<EdgeId> {
        self.edges()
            .filter(|&e| self.boundary_side(Cell::Edge(e)) == Some(side))
            .collect()
    }

    /// Over and under legs of a face: the edges along its normal that a
    /// framed copy of the face boundary crosses, seen along [`VIEW`].
    /// Legs that would leave the slab are `None`.
    pub fn over_under(&self, f: FaceId) -> (Option<EdgeId>, Option<EdgeId>) {
        let (p, nm) = self.face_pos(f);
        let (a, b) = nm.others();
        let p = to_i64(p);
        let sn = VIEW[nm.index()];
        let corner = |ax: Axis| if -VIEW[ax.index()] * sn > 0 { 0 } else { 1 };
        let (ca, cb) = (corner(a), corner(b));
        let mut plus = p;
        plus[a.index()] += ca;
        plus[b.index()] += cb;
        let mut minus = p;
        minus[a.index()] += 1 - ca;
        minus[b.index()] += 1 - cb;
        minus[nm.index()] -= 1;
        let plus = self.edge_at(plus, nm);
        let minus = self.edge_at(minus, nm);
        if sn > 0 {
            (plus, minus)
        } else {
            (minus, plus)
        }
    }

    /// Decoration legs attached to one edge of a framed curve. The product
    /// over the edges of a closed curve reproduces the over/under crossings
    /// of its framing; legs outside the slab are dropped.
    pub fn edge_decorations(&self, e: EdgeId) -> Vec<(EdgeId, Leg)> {
        let (p, a) = self.edge_pos(e);
        let p = to_i64(p);
        let legs: [([i64; 3], Axis, Leg); 2] = match a {
            Axis::X => [
                ([p[0], p[1] - 1, p[2]], Axis::Y, Leg::Over),
                (p, Axis::Z, Leg::Under),
            ],
            Axis::Y => [
                ([p[0] - 1, p[1], p[2]], Axis::X, Leg::Under),
                ([p[0], p[1], p[2] - 1], Axis::Z, Leg::Over),
            ],
            Axis::Z => [
                ([p[0], p[1] - 1, p[2]], Axis::Y, Leg::Over),
                ([p[0] - 1, p[1], p[2] + 1], Axis::X, Leg::Under),
            ],
        };
        legs.into_iter()
            .filter_map(|(q, ax, leg)| self.edge_at(q, ax).map(|e| (e, leg)))
            .collect()
    }

    /// Over and under edge sets of a chain's framing, accumulated mod 2.
    pub fn offset_curve(&self, chain: &Chain) -> Decorations {
        let mut d = Decorations::default();
        for &e in chain.edges() {
            for (leg, kind) in self.edge_decorations(e) {
                let set = match kind {
                    Leg::Over => &mut d.over,
                    Leg::Under => &mut d.under,
                };
                if !set.remove(&leg) {
                    set.insert(leg);
                }
            }
        }
        d
    }

    /// Straight chain of `len` edges from `start` along `axis`.
    pub fn straight_chain(&self, start: [i64; 3], axis: Axis, len: usize) -> Result<Chain> {
        let mut c = Chain::new();
        let mut p = start;
        for _ in 0..len {
            let e = self.edge_at(p, axis).ok_or_else(|| {
                Error::Geometry(format!("edge at {p:?} along {} leaves the lattice", axis.name()))
            })?;
            c.toggle(e);
            p[axis.index()] += 1;
        }
        Ok(c)
    }

    pub fn face_boundary(&self, f: FaceId) -> Chain {
        let mut c = Chain::new();
        for e in self.face_edges(f) {
            c.toggle(e);
        }
        c
    }

    /// Vertices of odd degree in the chain.
    pub fn chain_endpoints(&self, chain: &Chain) -> BTreeSet<VertexId> {
        let mut ends = BTreeSet::new();
        for &e in chain.edges() {
            for v in self.edge_vertices(e) {
                if !ends.remove(&v) {
                    ends.insert(v);
                }
            }
        }
        ends
    }

    pub fn is_closed(&self, chain: &Chain) -> bool {
        self.chain_endpoints(chain).is_empty()
    }

    /// All edges along `axis` whose coordinate along `axis` equals `level`.
    /// The dual of this set is a closed membrane normal to `axis`.
    pub fn dual_plane(&self, axis: Axis, level: usize) -> Result<BTreeSet<EdgeId>> {
        let b = &self.edge_blocks[axis.index()];
        if !b.present || level >= b.shape[axis.index()] {
            return Err(Error::Geometry(format!(
                "no edges along {} at level {level}",
                axis.name()
            )));
        }
        Ok(self
            .edges()
            .filter(|&e| {
                let (p, a) = self.edge_pos(e);
                a == axis && p[axis.index()] == level
            })
            .collect())
    }

    /// Faces with the given normal at coordinate `level` along it.
    pub fn face_plane(&self, normal: Axis, level: usize) -> Result<BTreeSet<FaceId>> {
        let b = &self.face_blocks[normal.index()];
        if !b.present || level >= b.shape[normal.index()] {
            return Err(Error::Geometry(format!(
                "no faces normal to {} at level {level}",
                normal.name()
            )));
        }
        Ok(self
            .faces()
            .filter(|&f| {
                let (p, n) = self.face_pos(f);
                n == normal && p[normal.index()] == level
            })
            .collect())
    }

    /// Offset of `p` from `c` along axis `i`, using the minimal periodic
    /// image in `[-(L-1)/2, L/2]`.
    /// Window of a ball along axis `i`, in doubled coordinates relative to
    /// the centre vertex (vertices even, cell midpoints odd). On a periodic
    /// axis the window is capped at width `2L - 3`, so a ball never holds a
    /// full cycle of edges nor a cell in every column.
    fn ball_window(&self, i: usize, r: usize) -> (i64, i64) {
        let mut w = 4 * r as i64;
        if self.periodic[i] && self.dims[i] > 1 {
            w = w.min(2 * self.dims[i] as i64 - 3);
        }
        let lo = -(w + 1) / 2;
        (lo, lo + w)
    }

    /// Whether the midpoint of an axis-`i` extent starting at `p` lies in the
    /// ball window around centre coordinate `c`.
    fn in_window(&self, i: usize, (lo, hi): (i64, i64), p: usize, ext: usize, c: usize) -> bool {
        let d = 2 * (p as i64 - c as i64) + ext as i64;
        if !self.periodic[i] {
            return lo <= d && d <= hi;
        }
        let period = 2 * self.dims[i] as i64;
        let m = (d - lo).rem_euclid(period);
        m <= hi - lo
    }

    /// Whether the cell lies inside the box of half-width `r` around vertex
    /// position `center`.
    pub fn in_ball(&self, center: [usize; 3], r: usize, cell: Cell) -> bool {
        let (p, kind) = self.cell_pos(cell);
        let ext = kind.extent();
        (0..3).all(|i| self.in_window(i, self.ball_window(i, r), p[i], ext[i] as usize, center[i]))
    }

    /// Whether some box of half-width `r` around a vertex contains all cells.
    pub fn fits_in_ball(&self, r: usize, cells: &[Cell]) -> bool {
        if cells.is_empty() {
            return true;
        }
        (0..3).all(|i| {
            let npos = if self.periodic[i] {
                self.dims[i]
            } else {
                self.dims[i] + 1
            };
            let win = self.ball_window(i, r);
            (0..npos).any(|c| {
                cells.iter().all(|&cell| {
                    let (p, kind) = self.cell_pos(cell);
                    self.in_window(i, win, p[i], kind.extent()[i] as usize, c)
                })
            })
        })
    }

    /// Translate a cell by `(dx, 0, dz)` using periodicity in x and z.
    pub fn translate(&self, cell: Cell, dx: i64, dz: i64) -> Cell {
        let (p, kind) = self.cell_pos(cell);
        let q = [p[0] as i64 + dx, p[1] as i64, p[2] as i64 + dz];
        self.cell_at(q, kind).expect("translation preserves the lattice")
    }

    pub fn info(&self) -> ComplexInfo {
        let boundary = match self.topology {
            Topology::Torus2 => vec!["periodic".into(), "periodic".into()],
            Topology::Torus3 => vec!["periodic".into(); 3],
            Topology::Slab => vec!["periodic".into(), "open".into(), "periodic".into()],
        };
        let dims = if self.is_3d() {
            self.dims.to_vec()
        } else {
            self.dims[..2].to_vec()
        };
        ComplexInfo {
            topology: self.topology,
            dims,
            boundary,
            projection: PROJECTION_TAG.into(),
            n_vertices: self.n_vertices(),
            n_edges: self.n_edges(),
            n_faces: self.n_faces(),
            n_cubes: self.n_cubes(),
        }
    }
}

pub(crate) fn to_i64(p: [usize; 3]) -> [i64; 3] {
    p.map(|v| v as i64)
}

pub(crate) fn add(a: [i64; 3], b: [i64; 3]) -> [i64; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

/// 1-chain over GF(2).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Chain {
    edges: BTreeSet<EdgeId>,
}

impl Chain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_edges(edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut c = Self::new();
        for e in edges {
            c.toggle(e);
        }
        c
    }

    pub fn edges(&self) -> &BTreeSet<EdgeId> {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn toggle(&mut self, e: EdgeId) {
        if !self.edges.remove(&e) {
            self.edges.insert(e);
        }
    }

    pub fn xor(&mut self, other: &Chain) {
        for &e in &other.edges {
            self.toggle(e);
        }
    }
}

/// Over and under leg sets of a framed chain.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decorations {
    pub over: BTreeSet<EdgeId>,
    pub under: BTreeSet<EdgeId>,
}
