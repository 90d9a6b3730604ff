use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    WrongDimension { expected: usize, got: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("singular")]
    Singular,
    #[error("not full-dimensional")]
    NotFullDimensional,
    #[error("zero direction")]
    ZeroDirection,
    #[error("origin not contained")]
    OriginNotContained,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("negative argument {0} outside the domain [0, inf)")]
    NegativeArgument(String),
    #[error("could not generate a full-dimensional polytope after {0} attempts")]
    Degenerate(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
