use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("invalid lattice size: {0}")]
    Size(String),
    #[error("unsupported topology: {0}")]
    Topology(String),
    #[error("geometry error: {0}")]
    Geometry(String),
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("string is not supported on the right boundary")]
    NotOnBoundary,
    #[error("unknown operator label {0:?}")]
    UnknownOperator(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("no unenforced layer to open the loop in (W = {w}, L_y = {ly})")]
    CannotOpenLoop { w: usize, ly: usize },
    #[error("no symmetric paired decomposition for {0}")]
    NoSymmetricDecomposition(String),
    #[error("empty move set")]
    EmptyMoveSet,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
