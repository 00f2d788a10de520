//! Error types shared across the crate.

use thiserror::Error;

/// Errors from the exact arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeroPolynomials,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("discriminant requires degree >= 1")]
    ConstantDiscriminant,
}

/// Errors from Sturm-chain construction and counting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SturmError {
    #[error("polynomial is not squarefree: repeated factor {witness}")]
    NotSquarefree { witness: String },
    #[error("interval endpoint {endpoint} is a root; perturb the interval")]
    RootAtEndpoint { endpoint: String },
    #[error("degree must be at least 1")]
    ConstantPolynomial,
    #[error("{0}")]
    Arith(#[from] ArithError),
}

/// Errors from number-field towers and their embeddings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("minimal polynomial is reducible; found factor {factor}")]
    ReducibleMinpoly { factor: String },
    #[error("minimal polynomial must have degree >= 2")]
    TrivialMinpoly,
    #[error("root selector does not isolate exactly one root of the minimal polynomial")]
    AmbiguousRootSelector,
    #[error("embedding precision exhausted at {bits} bits; cap is 16x the initial precision")]
    PrecisionExhausted { bits: u32 },
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("elements belong to different towers")]
    MixedTowers,
    #[error("primitive element search budget (c <= {budget}) exhausted")]
    PrimitiveSearchExhausted { budget: u32 },
    #[error("shift search for a squarefree norm exhausted")]
    NormShiftExhausted,
    #[error("expected a prime, got {0}")]
    NotPrime(u64),
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("{0}")]
    Arith(#[from] ArithError),
}

/// Errors from radical chains and the rho criterion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChainError {
    #[error("radicand expression is not a member of its level: {0}")]
    RadicandNotInLevel(String),
    #[error("step index {0} out of range")]
    StepOutOfRange(usize),
    #[error("base field is not conjugation invariant")]
    BaseNotConjugationInvariant,
    #[error("hypothesis violated: {hypothesis}")]
    HypothesisViolated { hypothesis: String },
    #[error("{0}")]
    Field(#[from] FieldError),
    #[error("{0}")]
    Arith(#[from] ArithError),
}
