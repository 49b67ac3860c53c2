use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("expected a square {expected}x{expected} matrix, got {found:?}")]
    Dimension { expected: usize, found: (usize, usize) },
    #[error("matrix is not a projection (P = P* = P^2 fails)")]
    NotProjection,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("empty input")]
    EmptyInput,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("internal invariant breached: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
