use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("total dimension {dim} exceeds the cap of {cap}")]
    SizeGuard { dim: usize, cap: usize },

    #[error("{0}")]
    Io(#[from] std::io::Error),

    /// Audit found violations of relations that should hold.
    #[error("{0} unexpected violation(s)")]
    Violation(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Violation(_) => 1,
            CliError::Input(_) | CliError::Io(_) => 2,
            CliError::SizeGuard { .. } => 3,
        }
    }
}

impl From<concvec::Error> for CliError {
    fn from(e: concvec::Error) -> Self {
        match e {
            concvec::Error::SizeGuard { dim, cap } => CliError::SizeGuard { dim, cap },
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("invalid state file: {e}"))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
