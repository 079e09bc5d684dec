use thiserror::Error;

use crate::vertex_set::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} is outside the ground set 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("ground set size {n} exceeds the supported limit {limit}")]
    GroundTooLarge { n: usize, limit: usize },

    #[error("operation is undefined on the void complex")]
    VoidComplex,

    #[error("ground sizes differ: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },

    #[error("the boundary of the empty simplex is undefined")]
    EmptySimplex,

    #[error("uniform matroid U({n},{k}) requires k <= n")]
    InvalidUniform { n: usize, k: usize },

    #[error("complex is not a matroid")]
    NotAMatroid,

    #[error("degree parts overlap in {overlap}")]
    OverlappingDegree { overlap: VertexSet },

    #[error("the negative part of the degree must be nonempty")]
    EmptyNegativePart,

    #[error("{set} is a face; expected a nonface")]
    UnexpectedFace { set: VertexSet },

    #[error("{set} is not a face; expected a face")]
    UnexpectedNonface { set: VertexSet },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("matroid is discrete; independent sets not recoverable")]
    DiscreteAmbiguous,

    #[error("table is not the T1 table of any matroid: {0}")]
    NotAMatroidTable(String),

    #[error("census supports at most {limit} vertices, got {n}")]
    CensusTooLarge { n: usize, limit: usize },

    #[error("invalid `{key}`: {message}")]
    Format { key: String, message: String },

    #[error("malformed degree {text:?}: {message}")]
    DegreeSyntax { text: String, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable identifier for scripted consumers.
    pub fn code(&self) -> &'static str {
        match self {
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::GroundTooLarge { .. } => "GroundTooLarge",
            Error::VoidComplex => "VoidComplex",
            Error::GroundMismatch { .. } => "GroundMismatch",
            Error::EmptySimplex => "EmptySimplex",
            Error::InvalidUniform { .. } => "InvalidUniform",
            Error::NotAMatroid => "NotAMatroid",
            Error::OverlappingDegree { .. } => "OverlappingDegree",
            Error::EmptyNegativePart => "EmptyNegativePart",
            Error::UnexpectedFace { .. } => "UnexpectedFace",
            Error::UnexpectedNonface { .. } => "UnexpectedNonface",
            Error::Precondition(_) => "Precondition",
            Error::DiscreteAmbiguous => "DiscreteAmbiguous",
            Error::NotAMatroidTable(_) => "NotAMatroidTable",
            Error::CensusTooLarge { .. } => "CensusTooLarge",
            Error::Format { .. } => "Format",
            Error::DegreeSyntax { .. } => "DegreeSyntax",
            Error::Json(_) => "Json",
        }
    }

    pub(crate) fn format(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Format {
            key: key.into(),
            message: message.into(),
        }
    }
}
