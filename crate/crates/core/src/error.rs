use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime (p must be prime with 2 <= p <= 2^31)")]
    InvalidPrime(u64),
    #[error("the number of variables must be at least 1")]
    NoVariables,
    #[error("operands live over different rings ({left} vs {right})")]
    ContextMismatch { left: String, right: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("operation needs a nonzero input")]
    ZeroInput,
    #[error("malformed word at byte {at}: {message}")]
    MalformedWord { at: usize, message: String },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("cap {cap} is smaller than generator degree {degree}")]
    CapTooSmall { cap: u32, degree: i64 },
    #[error("negative shift {0} is not supported here")]
    NegativeShift(i64),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
    #[error("enumeration budget of {budget} monomials exceeded in degree {degree}")]
    EnumerationBudget { budget: usize, degree: u32 },
    #[error("filtered dimension in degree {degree} did not stabilize up to slack {slack}")]
    NoStabilization { degree: u32, slack: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
