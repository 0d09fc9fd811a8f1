use thiserror::Error;

/// Errors raised by the exact-arithmetic, algebra and representation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("zero polynomial has no root order")]
    ZeroPolynomial,
    #[error("pole at {0}")]
    Pole(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid box: {0}")]
    InvalidBox(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("fusion function is not regular at u = {point} (numerator order {numerator_order} + exponent {exponent} < denominator order {denominator_order})")]
    FusionRegularity {
        point: String,
        numerator_order: usize,
        exponent: i64,
        denominator_order: usize,
    },
    #[error("coefficient has a pole at the specialization omega = {0}")]
    Specialization(String),
    #[error("singular matrix")]
    Singular,
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
