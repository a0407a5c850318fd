use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("inadmissible root system {family}{rank}")]
    InadmissibleRootSystem { family: char, rank: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("node index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight {0} is not dominant")]
    NonDominant(String),

    #[error("formal characters belong to different root systems")]
    MixedRootSystems,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid twist data: {0}")]
    InvalidTwist(String),

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("unsupported geometry: {0}")]
    UnsupportedGeometry(String),

    #[error("object count {count} exceeds the cap of {cap}")]
    SizeCapExceeded { count: usize, cap: usize },

    #[error("objects of mismatched types")]
    MismatchedTypes,

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("malformed matrix file: {0}")]
    MatrixFormat(String),
}
