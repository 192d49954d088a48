//! Phase-free Pauli operators as pairs of bit masks.

use std::fmt::Write as _;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::gf2::BitVec;

/// Single-qubit Pauli letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn bits(self) -> (bool, bool) {
        match self {
            Pauli::I => (false, false),
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }
}

/// Pauli operator on `n` qubits, identified modulo phase.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PauliOperator {
    x: BitVec,
    z: BitVec,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
        }
    }

    pub fn from_masks(x: BitVec, z: BitVec) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::Dimension {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self { x, z })
    }

    pub fn single(n: usize, qubit: usize, p: Pauli) -> Self {
        let mut op = Self::identity(n);
        op.apply(qubit, p);
        op
    }

    pub fn from_sparse(n: usize, xs: &[u32], zs: &[u32]) -> Self {
        let mut op = Self::identity(n);
        for &q in xs {
            op.x.flip(q as usize);
        }
        for &q in zs {
            op.z.flip(q as usize);
        }
        op
    }

    pub fn n_qubits(&self) -> usize {
        self.x.len()
    }

    pub fn x_mask(&self) -> &BitVec {
        &self.x
    }

    pub fn z_mask(&self) -> &BitVec {
        &self.z
    }

    /// Multiply by a single-qubit Pauli on `qubit`.
    pub fn apply(&mut self, qubit: usize, p: Pauli) {
        let (x, z) = p.bits();
        if x {
            self.x.flip(qubit);
        }
        if z {
            self.z.flip(qubit);
        }
    }

    pub fn get(&self, qubit: usize) -> Pauli {
        match (self.x.get(qubit), self.z.get(qubit)) {
            (false, false) => Pauli::I,
            (true, false) => Pauli::X,
            (true, true) => Pauli::Y,
            (false, true) => Pauli::Z,
        }
    }

    pub fn mul_assign(&mut self, other: &PauliOperator) {
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }

    pub fn commutes(&self, other: &PauliOperator) -> bool {
        assert_eq!(self.n_qubits(), other.n_qubits(), "qubit count mismatch");
        self.x.and_parity(&other.z) == self.z.and_parity(&other.x)
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn weight(&self) -> usize {
        self.support().count()
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.x
            .words()
            .iter()
            .zip(self.z.words())
            .enumerate()
            .flat_map(|(i, (&a, &b))| {
                let mut w = a | b;
                std::iter::from_fn(move || {
                    if w == 0 {
                        return None;
                    }
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                })
            })
    }

    /// Symplectic vector `x || z`.
    pub fn symplectic(&self) -> BitVec {
        self.x.concat(&self.z)
    }

    /// Vector whose dot product with `other.symplectic()` is the commutator.
    pub fn symplectic_dual(&self) -> BitVec {
        self.z.concat(&self.x)
    }

    pub fn from_symplectic(v: &BitVec) -> Self {
        let n = v.len() / 2;
        Self {
            x: v.slice(0, n),
            z: v.slice(n, 2 * n),
        }
    }

    pub fn to_sparse(&self) -> SparsePauli {
        SparsePauli {
            x: self.x.iter_ones().map(|q| q as u32).collect(),
            z: self.z.iter_ones().map(|q| q as u32).collect(),
        }
    }

    /// `n:xhex:zhex`, where byte `i` of each mask holds qubits `8i..8i+8`
    /// with the lowest qubit in the least significant bit.
    pub fn to_hex(&self) -> String {
        let n = self.n_qubits();
        format!("{n}:{}:{}", mask_hex(&self.x), mask_hex(&self.z))
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let mut parts = s.split(':');
        let (Some(n), Some(xs), Some(zs), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(Error::Parse(format!("malformed Pauli string {s:?}")));
        };
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad qubit count in {s:?}")))?;
        Ok(Self {
            x: parse_mask(n, xs)?,
            z: parse_mask(n, zs)?,
        })
    }
}

impl Mul for &PauliOperator {
    type Output = PauliOperator;

    fn mul(self, rhs: &PauliOperator) -> PauliOperator {
        let mut out = self.clone();
        out.mul_assign(rhs);
        out
    }
}

fn mask_hex(mask: &BitVec) -> String {
    let nbytes = mask.len().div_ceil(8);
    let mut s = String::with_capacity(2 * nbytes);
    for b in 0..nbytes {
        let word = mask.words()[b / 8];
        let byte = (word >> (8 * (b % 8))) & 0xff;
        let _ = write!(s, "{byte:02x}");
    }
    s
}

fn parse_mask(n: usize, hex: &str) -> Result<BitVec> {
    if hex.len() != 2 * n.div_ceil(8) || !hex.is_ascii() {
        return Err(Error::Parse(format!(
            "mask {hex:?} has wrong length for {n} qubits"
        )));
    }
    let mut v = BitVec::zeros(n);
    for b in 0..n.div_ceil(8) {
        let byte = u8::from_str_radix(&hex[2 * b..2 * b + 2], 16)
            .map_err(|_| Error::Parse(format!("invalid hex in {hex:?}")))?;
        for bit in 0..8 {
            if byte >> bit & 1 == 1 {
                let q = 8 * b + bit;
                if q >= n {
                    return Err(Error::Parse(format!("bit {q} set beyond {n} qubits")));
                }
                v.set(q, true);
            }
        }
    }
    Ok(v)
}

/// Sorted qubit lists of the X and Z parts. Used where operators are local.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparsePauli {
    pub x: Vec<u32>,
    pub z: Vec<u32>,
}

impl SparsePauli {
    /// Build from possibly repeated entries; repeats cancel in pairs.
    pub fn from_lists(mut x: Vec<u32>, mut z: Vec<u32>) -> Self {
        Self {
            x: cancel_pairs(&mut x),
            z: cancel_pairs(&mut z),
        }
    }

    pub fn to_dense(&self, n: usize) -> PauliOperator {
        PauliOperator::from_sparse(n, &self.x, &self.z)
    }

    pub fn support(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.x.iter().chain(&self.z).copied().collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_empty() && self.z.is_empty()
    }

    pub fn x_at(&self, q: u32) -> bool {
        self.x.binary_search(&q).is_ok()
    }

    pub fn z_at(&self, q: u32) -> bool {
        self.z.binary_search(&q).is_ok()
    }
}

fn cancel_pairs(v: &mut [u32]) -> Vec<u32> {
    v.sort_unstable();
    let mut out: Vec<u32> = Vec::with_capacity(v.len());
    for &q in v.iter() {
        if out.last() == Some(&q) {
            out.pop();
        } else {
            out.push(q);
        }
    }
    out
}
