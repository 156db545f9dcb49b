use thiserror::Error;

/// Errors raised by the algebra, solver and verification layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid scalar literal {0:?}")]
    InvalidScalar(String),

    #[error("malformed algebra document: {0}")]
    MalformedDocument(String),

    #[error("beta is not an algebra morphism: fails on basis pair ({0}, {1})")]
    NotAMorphism(usize, usize),

    #[error("beta does not commute with the twist map")]
    TwistDoesNotCommute,

    #[error("subspace is not a Hom-ideal")]
    NotAnIdeal,

    #[error("subspaces do not form a direct sum of Hom-ideals spanning the algebra")]
    NotADirectSumOfIdeals,

    #[error("operator is not idempotent")]
    NotIdempotent,

    #[error("operator is not a centroid element at power {0}")]
    NotCentroid(usize),

    #[error("operator does not preserve the kernel of the projection")]
    DoesNotPreserveIdeal,

    #[error("operator does not commute with the twist map")]
    NotInCommutant,

    #[error("witness does not satisfy the quasiderivation identity at power {0}")]
    InvalidWitness(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
