use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(
        "point is not in the upper half-plane: imaginary part {0} must be positive and finite"
    )]
    NotInHalfPlane(f64),

    #[error("matrix has non-positive determinant {0}")]
    Degenerate(f64),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("element cap of {cap} exceeded while enumerating the orbit ball")]
    ResourceCap { cap: usize },

    #[error("malformed orbit-ball cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] IoError),
}

/// `std::io::Error` is neither `Clone` nor `PartialEq`; keep its rendering only.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("i/o error: {0}")]
pub struct IoError(pub String);

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(IoError(e.to_string()))
    }
}

pub(crate) fn precondition<S: Into<String>>(msg: S) -> Error {
    Error::Precondition(msg.into())
}
