use std::process::ExitCode;

use teachdim_core::Error as CoreError;

/// Failures that end a run without a report. Each maps to a fixed exit code;
/// a failed claim is not an error (the report is printed and the exit code
/// is 1).
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CLAIM_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PARSE: u8 = 3;
pub const EXIT_BOUND: u8 = 4;
pub const EXIT_INTERNAL: u8 = 5;

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Bound(_) => EXIT_BOUND,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(self.code())
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let msg = e.to_string();
        match e {
            CoreError::SizeBound { .. }
            | CoreError::DomainOverflow { .. }
            | CoreError::StageHorizon { .. }
            | CoreError::HorizonTooSmall(_)
            | CoreError::CodeOverflow(_) => CliError::Bound(msg),
            CoreError::EmptyDomain
            | CoreError::EmptyClass
            | CoreError::ElementOutOfDomain { .. }
            | CoreError::DuplicateName(_)
            | CoreError::InvalidName(_)
            | CoreError::ConflictingLabels(_)
            | CoreError::MissingFromSequence(_)
            | CoreError::RepeatedInSequence(_)
            | CoreError::EmptyBlock(_)
            | CoreError::Descriptor(_) => CliError::Parse(msg),
            CoreError::IndexOutOfRange { .. } | CoreError::ZeroBound => CliError::Usage(msg),
        }
    }
}
