use num_bigint::BigInt;
use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("radicand mismatch: sqrt({0}) vs sqrt({1})")]
    RadicandMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("value exceeds the f64 range")]
    Overflow,
    #[error("unsupported parameters: {0}")]
    UnsupportedParams(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid digit string: {0}")]
    InvalidDigits(String),
    #[error("invalid anchor: x = {x} must satisfy 0 <= x < l_k = {limit}")]
    InvalidAnchor { x: BigInt, limit: BigInt },
    #[error("index is not a member of the interval")]
    NotInInterval,
    #[error("resource limit exceeded: {needed} intervals > cap {cap}")]
    ResourceLimit { needed: String, cap: u64 },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("interval lengths lie in distinct quadratic fields")]
    FieldMismatch,
    #[error("coordinate index out of range")]
    IndexOutOfRange,
    #[error("empty input")]
    EmptyInput,
    #[error("input out of range: {0}")]
    OutOfRange(String),
    #[error("unknown test function: {0}")]
    UnknownFunction(String),
    #[error("no power relation found with exponents up to {max_exp}")]
    NoRelationFound { max_exp: u32 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
