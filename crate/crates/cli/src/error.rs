use std::path::PathBuf;

/// Failures surfaced by the command-line tool, each with a fixed exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{0}")]
    Capacity(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("invalid report: {0}")]
    Report(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Capacity(_) => 3,
            _ => 2,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<graphsym::Error> for CliError {
    fn from(e: graphsym::Error) -> Self {
        match e {
            graphsym::Error::Capacity { .. } => CliError::Capacity(e.to_string()),
            graphsym::Error::Domain(m) => CliError::Usage(m),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
