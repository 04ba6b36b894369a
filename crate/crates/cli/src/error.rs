//! CLI error taxonomy mapped to process exit codes: 2 for schema or
//! input-validation problems, 3 for mathematical failures surfaced by
//! the computational modules, 4 for I/O.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Schema(String),
    Math(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) => 2,
            CliError::Math(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn schema(msg: impl Into<String>) -> Self {
        CliError::Schema(msg.into())
    }

    pub fn math(err: impl fmt::Display) -> Self {
        CliError::Math(err.to_string())
    }

    pub fn io(err: impl fmt::Display) -> Self {
        CliError::Io(err.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Schema(m) => write!(f, "schema error: {m}"),
            CliError::Math(m) => write!(f, "math error: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}
