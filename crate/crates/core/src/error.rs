use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Input outside the domain of the operation.
    InvalidArgument(String),
    /// An enumeration would exceed its configured cap.
    ResourceCap { what: &'static str, cap: u64 },
    /// An internal cross-check between two independent computations failed.
    Verification(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::ResourceCap { what, cap } => {
                write!(f, "resource cap exceeded: more than {cap} {what}")
            }
            Error::Verification(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}
