use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or inconsistent input data.
    #[error("invalid input: {0}")]
    Input(String),

    /// An exponential search was refused because the input exceeds the configured limit.
    #[error("size guard: {what} has {size} > {limit}; pass an explicit override to run anyway")]
    Guard { what: &'static str, size: usize, limit: usize },

    #[error("not a valid Z2-complex: {0}")]
    Involution(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
}
