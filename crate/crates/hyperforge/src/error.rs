use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{n} is not a prime power ({n} = {factorization})")]
    NotPrimePower { n: u64, factorization: String },

    #[error("{what} is {got}, which exceeds the bound {limit}")]
    BoundExceeded {
        what: &'static str,
        got: u128,
        limit: u128,
    },

    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("the zero polynomial has no factorization")]
    ZeroPolynomial,

    #[error("malformed hyperfield table: {0}")]
    MalformedTable(String),

    #[error("structure is not a projective geometry: {0}")]
    GeometryInvalid(String),

    #[error("step budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("formula has free variable `{0}`")]
    FreeVariable(String),

    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
