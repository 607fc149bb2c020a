use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An edge referenced a node id outside `[0, n_nodes)`.
    #[error("edge #{index} ({u}, {v}) references a node outside [0, {n_nodes})")]
    NodeOutOfRange {
        index: usize,
        u: u32,
        v: u32,
        n_nodes: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no edges")]
    NoEdges,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("all sampling weights are zero")]
    ZeroWeights,

    #[error("insufficient range for power-law fit: {0}")]
    InsufficientRange(String),

    /// The generator could not place a link without breaking simplicity.
    #[error("generator stalled: {0}")]
    GeneratorStalled(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
