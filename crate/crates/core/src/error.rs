use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("resource limit: {0}")]
    Resource(String),

    /// A certified comparison could not be decided before the precision cap.
    #[error("indeterminate comparison at n = {n} after {bits} bits of precision")]
    Indeterminate { n: String, bits: u32 },

    /// A value that is a theorem failed to verify; always a bug in this crate.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
