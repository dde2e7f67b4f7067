use thiserror::Error;

/// Failure modes shared by every operation in the crate.
///
/// The variants map one-to-one onto the exit codes of the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: unknown variables, empty lists, bad parameters.
    #[error("input error: {0}")]
    Input(String),
    /// The arguments are well formed but violate an operation's precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured size cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    /// Two routes that must agree did not.
    #[error("invariant violation: {0}")]
    Invariant(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Input(_) => 1,
            Error::Domain(_) => 2,
            Error::Resource(_) => 3,
            Error::Invariant(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! input_err {
    ($($arg:tt)*) => { $crate::error::Error::Input(format!($($arg)*)) };
}
macro_rules! domain_err {
    ($($arg:tt)*) => { $crate::error::Error::Domain(format!($($arg)*)) };
}
macro_rules! resource_err {
    ($($arg:tt)*) => { $crate::error::Error::Resource(format!($($arg)*)) };
}
macro_rules! invariant_err {
    ($($arg:tt)*) => { $crate::error::Error::Invariant(format!($($arg)*)) };
}
pub(crate) use {domain_err, input_err, invariant_err, resource_err};
