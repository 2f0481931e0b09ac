use thiserror::Error;

/// Errors raised across the library.
///
/// Input problems (bad labels, malformed files, bad configuration) are kept
/// apart from contract violations so front ends can map them to distinct
/// exit statuses.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("node label {label} out of range for {n} nodes")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("self-loop on node {node}")]
    SelfLoop { node: usize },

    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("matrix dimension {n} exceeds oracle limit {limit}")]
    OracleLimit { n: usize, limit: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by a broken
    /// internal invariant.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Contract(_) | Error::Verification(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
