use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("colour words differ at position {position}: {left} vs {right}")]
    ColourMismatch {
        position: usize,
        left: String,
        right: String,
    },

    #[error("cannot rotate from an empty {0} row")]
    EmptyRow(&'static str),

    #[error("block {0} is not a block of the partition")]
    BlockNotFound(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("label {label} outside 1..={n}")]
    LabelOutOfRange { label: u32, n: u32 },

    #[error("{what}: size {size} exceeds the cap {cap}")]
    CapExceeded { what: String, size: u128, cap: u128 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("no value assigned to symbol {0}")]
    MissingSymbol(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("inconsistent lattice: {0}")]
    Lattice(String),

    #[error("invalid JSON: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
