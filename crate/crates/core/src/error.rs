use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: expected {expected}, got {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("{sub} is not a sub-multiset of {sup}")]
    NotContained { sub: String, sup: String },

    #[error("oracle bound exceeded: n = {n} > {bound}")]
    OracleBound { n: usize, bound: usize },

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inexact division: {0}")]
    Inexact(String),
}
