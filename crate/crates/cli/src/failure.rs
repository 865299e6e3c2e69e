use std::fmt;
use std::process::ExitCode;

/// A failed run and the exit status it maps to.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, unreadable or malformed input, violated preconditions.
    Usage(String),
    /// A verified identity or inequality came out false.
    Counterexample(String),
    /// The library caught itself in an inconsistent state.
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Counterexample(_) => ExitCode::from(1),
            Failure::Usage(_) => ExitCode::from(2),
            Failure::Internal(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => write!(f, "error: {msg}"),
            Failure::Counterexample(msg) => write!(f, "counterexample: {msg}"),
            Failure::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl From<agrees::Error> for Failure {
    fn from(err: agrees::Error) -> Self {
        match err {
            agrees::Error::InvariantBreach(_) => Failure::Internal(err.to_string()),
            agrees::Error::ReductionNotContained { .. } => Failure::Usage(format!("precondition failed: {err}")),
            other => Failure::Usage(other.to_string()),
        }
    }
}
