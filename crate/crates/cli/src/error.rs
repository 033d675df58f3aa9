use std::path::PathBuf;

use twist53_core::Error as CoreError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid artifact: {0}")]
    Artifact(String),
    #[error("oracle identities failed: {0}")]
    Oracle(String),
}

impl CliError {
    pub fn parse(what: &'static str, detail: impl Into<String>) -> Self {
        CliError::Parse { what, detail: detail.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::LimitExceeded(_)) => EXIT_LIMIT,
            CliError::Core(e) if e.is_input_error() => EXIT_INPUT,
            CliError::Core(_) | CliError::Oracle(_) => EXIT_INTERNAL,
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Artifact(_) => EXIT_INPUT,
        }
    }

    /// Stable machine-readable name of the failure.
    pub fn reason(&self) -> String {
        match self {
            CliError::Core(e) => {
                let dbg = format!("{e:?}");
                dbg.split(['(', ' ']).next().unwrap_or_default().to_string()
            }
            CliError::Parse { .. } => "ParseError".into(),
            CliError::Io { .. } => "IoError".into(),
            CliError::Artifact(_) => "InvalidArtifact".into(),
            CliError::Oracle(_) => "OracleFailure".into(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "error": self.reason(),
            "message": self.to_string(),
            "exit_code": self.exit_code(),
        })
    }
}

pub type CliResult<T> = Result<T, CliError>;
