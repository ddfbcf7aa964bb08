use thiserror::Error;

use crate::arith::RatPoly;

/// Errors raised by the arithmetic kernels and the factorization algorithms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("polynomial is not squarefree")]
    NotSquarefree,

    #[error("division by zero")]
    DivisionByZero,

    #[error("quaternion algebra ({alpha}, {beta}) is split")]
    SplitAlgebra { alpha: String, beta: String },

    #[error("operands belong to different quaternion algebras")]
    AlgebraMismatch,

    /// Inversion over an extension field hit an element of reduced norm zero.
    /// The coordinates of the offending element are carried along.
    #[error("zero divisor encountered")]
    ZeroDivisorEncountered { witness: Vec<Vec<String>> },

    #[error("quadratic field Q(sqrt({d})) does not embed into the algebra")]
    EmbeddingObstructed { d: String },

    #[error("value is not represented by the form")]
    NotRepresented,

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    /// The bounded zero-divisor search gave up; an external certificate for
    /// `factor` is required.
    #[error("zero-divisor search exhausted for central factor {factor}; supply a certificate")]
    SearchExhausted { factor: RatPoly },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),

    #[error("malformed data: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
