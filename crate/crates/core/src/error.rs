use thiserror::Error;

/// Errors produced by ring parsing, construction and the analysis layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("Z/{0}: modulus must be at least 2")]
    ModulusTooSmall(u64),
    #[error("polynomial modulus must be monic of degree >= 1 (got {0})")]
    BadModulus(String),
    #[error("polynomial variable `{found}` does not match the declared `{expected}`")]
    VariableMismatch { expected: String, found: String },
    #[error("ring order {order} exceeds the cap of {cap}")]
    OrderCap { order: String, cap: u64 },
    #[error("{what}: size {size} exceeds the cap of {cap}")]
    Cap {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("ring is not reduced: {0} is a nonzero nilpotent")]
    NotReduced(String),
    #[error("index {index} out of range for {len} factors")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("element does not belong to the ring")]
    InvalidElement,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
