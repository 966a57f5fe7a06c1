//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {point} occurs more than once in cycle notation")]
    RepeatedPoint { point: usize },
    #[error("point {point} is out of range 1..={degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("malformed cycle notation: {0}")]
    Malformed(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("k = {k} is out of range 1..={degree}")]
    KTooLarge { k: usize, degree: usize },
    #[error("unsupported degree {0}")]
    BadDegree(usize),
    #[error("{0} is not a prime in the supported range")]
    NotPrime(u64),
    #[error("group is not transitive")]
    NotTransitive,
    #[error("ambient group is not transitive")]
    NotTransitiveAmbient,
    #[error("action domain of size {size} exceeds cap {cap}")]
    DomainTooLarge { size: u64, cap: u64 },
    #[error("backtrack search exceeded the node budget of {0}")]
    SearchBudgetExceeded(u64),
    #[error("orbit exceeded the cap of {0} elements")]
    OrbitCapExceeded(usize),
    #[error("group data failed validation: {0}")]
    ValidationFailed(String),
    #[error("missing data file: {0}")]
    MissingData(String),
    #[error("unexpected orbit shape: {0}")]
    UnexpectedOrbitShape(String),
    #[error("no qualifying object found: {0}")]
    NotFound(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
