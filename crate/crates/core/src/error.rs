use thiserror::Error;

/// Errors raised by the algebraic engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("prime modulus {0} exceeds the supported range (< 2^31)")]
    ModulusTooLarge(u64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch between operands")]
    FieldMismatch,
    #[error("inconsistent variable sets: expected {expected} variables, found {found}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("empty generator list")]
    NoGenerators,
    #[error("quotient is infinite dimensional: variable {0} has no pure power among the leading monomials")]
    InfiniteDimensional(usize),
    #[error("algebra is not local: variable {0} is not nilpotent")]
    NotLocal(usize),
    #[error("generator {0} has a nonzero constant term")]
    ConstantTerm(usize),
    #[error("modules live over different algebras")]
    AlgebraMismatch,
    #[error("action data violates the algebra laws: {0}")]
    ActionLaw(String),
    #[error("resolution exceeds the rank limit: β_{step} = {rank}")]
    ResolutionTooLarge { step: usize, rank: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
