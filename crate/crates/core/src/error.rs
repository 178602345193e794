use thiserror::Error;

/// Errors produced by the construction, verification and bound routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero in GF({0})")]
    DivisionByZero(u32),
    #[error("invalid RS dimension k={k} for q={q} (need 2 <= k <= q+1)")]
    InvalidDimension { q: u32, k: usize },
    #[error("invalid shortening depth r={r} for k={k} (need r <= k-1)")]
    InvalidShortening { r: usize, k: usize },
    #[error("code is not a Reed-Solomon code (no RS metadata)")]
    MissingMetadata,
    #[error("code too large to materialize: {0} codewords")]
    CodeTooLarge(u128),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("column {column} has weight {weight}, expected {expected}")]
    NotConstantWeight {
        column: usize,
        weight: usize,
        expected: usize,
    },
    #[error("need at least two columns")]
    TooFewColumns,
    #[error("enumeration needs {required} row scans, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("argument outside domain: {0}")]
    DomainError(String),
    #[error("optimizer failed to converge: {0}")]
    ConvergenceFailure(String),
    #[error("unknown bound kind `{0}`")]
    UnknownKind(String),
    #[error("malformed matrix file at line {line}: {message}")]
    MalformedFile { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn out_of_range(msg: impl Into<String>) -> Error {
    Error::ParameterOutOfRange(msg.into())
}
