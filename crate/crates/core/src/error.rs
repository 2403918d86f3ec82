use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not in a single spectral symbol (term with y-exponent {0})")]
    NotSingleSymbol(i32),
    #[error("limit at zero undefined: term with negative exponent {0}")]
    NegativeExponent(i32),
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid leg index {0}")]
    InvalidLeg(usize),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
