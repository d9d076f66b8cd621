use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("malformed Cayley table: {0}")]
    Malformed(String),

    #[error("not a Latin square: row {row} repeats element {value}")]
    LatinRow { row: usize, value: usize },

    #[error("not a Latin square: column {col} repeats element {value}")]
    LatinColumn { col: usize, value: usize },

    #[error("element 0 is not the identity: row/column {index} is not fixed by it")]
    MissingIdentity { index: usize },

    #[error("associativity fails for ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },

    #[error("vertex or element index {index} out of range (size {size})")]
    Index { index: usize, size: usize },

    #[error("{what}: {size} exceeds the cap of {cap}")]
    Capacity {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
