use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex index {index} out of range (graph has {count} vertices)")]
    VertexOutOfRange { index: usize, count: usize },

    #[error("{0}")]
    Domain(String),

    #[error("no projective plane of order {0} exists")]
    NoPlaneExists(u32),

    #[error("no projective plane construction available for order {0}")]
    NoSuchPlaneConstruction(u32),

    #[error("invalid clique: vertices {0} and {1} are not adjacent")]
    InvalidClique(String, String),

    #[error("vertex {0} lies in no clique, its set would be empty")]
    EmptySet(String),

    #[error("representation mismatch at pair ({first}, {second}): {reason}")]
    RepresentationMismatch {
        first: String,
        second: String,
        reason: String,
    },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("theorem not applicable to {0}")]
    TheoremNotApplicable(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
