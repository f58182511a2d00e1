use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Each variant maps onto one failure class so that frontends can translate
/// errors into stable exit codes without inspecting messages.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index (minterm, mask, qubit, polarity) is outside its domain.
    #[error("{what} {index} out of range (must be < {bound})")]
    Range {
        what: &'static str,
        index: u64,
        bound: u64,
    },

    /// A size parameter exceeds a configured or structural bound.
    #[error("{what} is {value}, limit is {min}..={max}")]
    Limit {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    /// Text input could not be parsed. `line` and `column` are 1-based;
    /// zero means the position is not meaningful for this input.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Two values disagree on variable count.
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },

    /// Two values disagree on qubit count.
    #[error("width mismatch: expected {expected} qubits, got {got}")]
    Width { expected: usize, got: usize },

    /// The expansion is not suitable for the requested synthesis procedure.
    #[error("{0}")]
    WrongProcedure(String),

    /// A synthesized circuit failed its own verification.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
