use thiserror::Error;

use crate::algebra::Diagnostic;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different base rings")]
    RingMismatch,

    #[error("module rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("unsupported for this algebra: {0}")]
    Unsupported(String),

    #[error("invalid algebra presentation:\n{}", render_diagnostics(.0))]
    InvalidSpec(Vec<Diagnostic>),

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

fn render_diagnostics(diags: &[Diagnostic]) -> String {
    diags.iter().map(|d| format!("  - {d}")).collect::<Vec<_>>().join("\n")
}

/// A syntax or name-resolution error with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
