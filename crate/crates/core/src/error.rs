use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("arithmetic error: {0}")]
    Algebra(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("symmetric function error: {0}")]
    SymFunc(String),

    /// A computed object failed an identity it must satisfy (symmetry of a
    /// chromatic function, polynomiality of a total, ...).
    #[error("identity violated: {0}")]
    IdentityViolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
