use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no leading term of zero")]
    ZeroLeadingTerm,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    Params(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("edge {edge} has {size} vertices but the matrix has only {d} rows")]
    EdgeTooLarge { edge: String, size: usize, d: usize },

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("input is not a verified Gröbner basis")]
    Unverified,
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
