use resgraph_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    Parse(String),

    #[error(transparent)]
    Core(#[from] CoreError),
}

impl CliError {
    pub fn parse(msg: impl Into<String>) -> Self {
        CliError::Parse(msg.into())
    }

    /// 0 success, 1 I/O or parse, 2 domain or precondition, 3 inconsistent
    /// analytic input, 4 oracle bound.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 1,
            CliError::Core(e) => match e {
                CoreError::Json(_) => 1,
                CoreError::InconsistentInput(_) => 3,
                CoreError::OracleBound { .. } => 4,
                _ => 2,
            },
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
