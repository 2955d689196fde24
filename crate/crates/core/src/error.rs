use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial not allowed here: {0}")]
    ZeroPolynomial(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible: {0}")]
    NotInvertible(String),
    #[error("invalid divisor basis entry: {0}")]
    InvalidBasis(String),
    #[error("integer overflow while converting {0}")]
    Overflow(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid DPD pair: {0}")]
    InvalidPair(String),
    #[error("pair cannot be brought to normal form: {0}")]
    NotNormalizable(String),
    #[error("invalid normal form data: {0}")]
    InvalidNormalForm(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}
