use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("empty input")]
    EmptyInput,

    #[error("row {row}: expected {expected} entries, found {found}")]
    RaggedRows { row: usize, expected: usize, found: usize },

    #[error("row {row}, column {col}: malformed rational literal {literal:?}")]
    MalformedLiteral { row: usize, col: usize, literal: String },

    #[error("invalid JSON matrix document: {0}")]
    Json(String),

    #[error("{0}")]
    Io(String),

    #[error("unknown identity {name:?}; valid names: {valid}")]
    UnknownIdentity { name: String, valid: String },

    #[error(transparent)]
    Core(#[from] zeon_core::Error),
}

impl CliError {
    /// Exit codes 0–2 are reserved for verdicts.
    pub fn exit_code(&self) -> i32 {
        3
    }
}
