use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CkError {
    #[error("matrix is singular")]
    SingularMatrix,

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("the unscaled Hodge star needs an orthonormal metric; use scaled_hodge_star")]
    UnavailableInGramMode,

    #[error("Gram matrix is not symmetric positive-definite")]
    NonPositiveMetric,

    #[error("vector does not lie in the center")]
    NotCentral,

    #[error("degree {degree} out of range 0..={dim}")]
    DegreeOutOfRange { degree: usize, dim: usize },

    #[error("form is not conformal Killing")]
    NotConformalKilling,

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("catalog entry `{key}` has no witness `{label}`")]
    UnknownWitness { key: String, label: String },

    #[error("unknown catalog key `{0}`")]
    UnknownCatalogKey(String),

    #[error("invalid rational `{input}`: {reason}")]
    InvalidRational { input: String, reason: String },

    #[error("algebra failed validation: {0}")]
    InvalidAlgebra(String),
}
