use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The difference map needs at least two entries to work with.
    #[error("tuple of length {0} is too short for the difference map")]
    TupleTooShort(usize),

    /// Window sequences never repeat an edge, so duplicate inserts are bugs.
    #[error("duplicate edge {0}")]
    DuplicateEdge(String),

    #[error("graph is not Eulerian: {0}")]
    NotEulerian(String),

    /// A non-self-negative circuit whose negative is missing from the input,
    /// or a circuit containing both a tuple and its negative.
    #[error("circuit pairing violated: {0}")]
    PairingViolation(String),

    #[error("construction invariant violated: {0}")]
    ConstructionInvariantViolation(String),

    #[error("{k}^{n} exceeds the supported integer range")]
    Overflow { k: u16, n: usize },

    #[error("search space too large: {0}")]
    SearchSpaceTooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
