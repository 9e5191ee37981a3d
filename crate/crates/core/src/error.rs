use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generators have gcd {0}, not 1")]
    GcdNotOne(u64),
    #[error("invalid generator list: {0}")]
    InvalidGenerators(String),
    #[error("{value} is not a member of the semigroup")]
    NotAMember { value: i64 },
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("ideal is not contained in the ring")]
    NotIntegral,
    #[error("ideal is not m-primary")]
    NotMPrimary,
    #[error("J is not contained in I")]
    NotContained,
    #[error("operands live over different semigroups")]
    SemigroupMismatch,
    #[error("map is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("truncation {truncation} is below the required {required}")]
    TruncationTooLow { truncation: i64, required: i64 },
    #[error("element is zero")]
    ZeroElement,
    #[error("degree bound {bound} is below the required {required}")]
    BoundExceeded { bound: i64, required: i64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
