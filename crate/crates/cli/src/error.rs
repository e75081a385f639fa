use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("cannot evaluate: {0}")]
    Eval(String),
    #[error("{0}")]
    Core(#[from] bwm_core::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("malformed element file: {0}")]
    Format(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(bwm_core::Error::BudgetExhausted { .. }) => 2,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
