//! CLI error type with the documented exit-code mapping: 0 ok, 1 verification
//! failure, 2 usage error, 3 budget exceeded, 4 cache corruption.

use std::fmt;

use nsg_core::Error as CoreError;

#[derive(Debug)]
pub enum CliError {
    Core(CoreError),
    /// A checked identity or scan found a counterexample.
    Verification(String),
    Usage(String),
    CacheCorrupt(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(CoreError::BudgetExceeded(_)) => 3,
            CliError::Core(_) => 2,
            CliError::CacheCorrupt(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Verification(msg) => write!(f, "verification failed: {msg}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::CacheCorrupt(msg) => write!(f, "cache corrupt: {msg}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
