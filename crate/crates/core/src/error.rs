use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("gcd of {values:?} is {gcd}, expected 1")]
    GcdNotOne { values: Vec<u64>, gcd: u64 },
    #[error("{value} is not a nonzero member of the semigroup")]
    NotAMember { value: u64 },
    #[error("index {index} out of range [0, {bound})")]
    IndexOutOfRange { index: u64, bound: u64 },
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("polynomial division left a remainder")]
    InexactDivision,
    #[error("gap construction produced duplicate value {0}")]
    DuplicateGap(u64),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
