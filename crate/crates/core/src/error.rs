use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("polynomial {0} does not divide Y^{1}+1")]
    NotADivisor(String, usize),

    #[error("code has dimension 0")]
    ZeroDimension,

    #[error("enumeration of 2^{log2} codewords exceeds the budget of 2^{budget}; use a weight cap or min_distance with early stop")]
    EnumerationBudget { log2: usize, budget: usize },

    #[error("weight enumerator is truncated at weight {0}")]
    Truncated(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("code is not quasi-cyclic of index {ell}")]
    NotQuasiCyclic { ell: usize },

    #[error("code '{0}' is not self-dual")]
    NotSelfDual(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),

    #[error("search budget exhausted: {0}")]
    Budget(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
