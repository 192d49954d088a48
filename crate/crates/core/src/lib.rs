//! Lattice stabilizer codes with 1-form symmetry constraints.
//!
//! The crate builds the 3d three-fermion Walker-Wang model, toric codes and
//! a paramagnet-bulk model on cubic complexes, constructs their string and
//! membrane operators, and measures energy barriers of symmetric local
//! paths and memory times under Metropolis dynamics.

pub mod barrier;
pub mod codes;
pub mod dynamics;
pub mod error;
pub mod gf2;
pub mod lattice;
pub mod operators;
pub mod pauli;
pub mod symmetry;

pub use codes::{build, Model, StabilizerCode};
pub use error::{Error, Result};
pub use lattice::{Axis, Cell, CellComplex, Chain, Side, Topology};
pub use pauli::{Pauli, PauliOperator, SparsePauli};
