use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("not a partial permutation matrix: {0}")]
    NotAPartialPermutation(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid orbit data: {0}")]
    InvalidOrbit(String),

    #[error("capacity exceeded: {what} needs {needed}, limit is {limit}")]
    Capacity {
        what: String,
        needed: usize,
        limit: usize,
    },

    #[error("pipe dream does not contain the base pipe dream P_*")]
    MissingBaseCrosses,

    #[error("cell ({0},{1}) lies outside the target grid")]
    CellOutsideGrid(usize, usize),

    #[error("variable {0} has no assigned value")]
    MissingAssignment(String),

    #[error("evaluation divides by zero at variable {0}")]
    ZeroDenominator(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
