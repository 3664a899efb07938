//! Command-line front end: presentation files, presets, vector input and the
//! `reduce`, `gbasis`, `member` and `syzygy` reports.

pub mod presentation;
pub mod report;
pub mod session;

use skewgb_core::{Error, ParseError};

pub const EXIT_INPUT: i32 = 1;
pub const EXIT_UNSUPPORTED: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// An error together with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    pub fn parse(err: ParseError) -> Self {
        Failure::usage(err.to_string())
    }

    /// Prefixes the message, e.g. with the file an error came from.
    pub fn context(self, what: impl std::fmt::Display) -> Self {
        Failure {
            code: self.code,
            message: format!("{what}: {}", self.message),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Unsupported(_) => EXIT_UNSUPPORTED,
            Error::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

impl From<ParseError> for Failure {
    fn from(err: ParseError) -> Self {
        Failure::parse(err)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}
