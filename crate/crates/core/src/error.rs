use thiserror::Error;

use crate::linalg::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("modulus {0} is not a prime in the supported range")]
    NotPrime(u64),
    #[error("characteristic {characteristic} must be 0 or greater than {degree}")]
    Characteristic { characteristic: u64, degree: usize },
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("variable set mismatch")]
    VariableSetMismatch,
    #[error("operation requires a polynomial on the {0} side")]
    WrongSide(&'static str),
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },
    #[error("algebra has a nonzero piece in degree {0}; it is not Artinian within the bound")]
    NotArtinian(usize),
    #[error("linear form is zero")]
    ZeroLinearForm,
    #[error("partitions of {0} and {1} cannot be compared")]
    IncomparableUniverse(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
