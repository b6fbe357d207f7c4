use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The transform cannot handle this length (radix-2 FFT needs a power of two).
    #[error("unsupported size N = {n}: {constraint}")]
    UnsupportedSize { n: usize, constraint: &'static str },

    #[error("invalid symbol spec: {0}")]
    InvalidSpec(String),

    #[error("invalid benchmark config: {0}")]
    InvalidConfig(String),
}
