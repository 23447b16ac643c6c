//! IO companion for `regulus-core`: JSON input formats, machine-readable
//! reports, the manifest suite runner, and the `regulus` CLI entry points.

pub mod json;
pub mod ops;
pub mod report;
pub mod suite;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed JSON or flags.
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed input describing an invalid object.
    #[error("input error: {0}")]
    Input(String),
    /// Validation produced a report but the input is unusable.
    #[error("invalid input (see report)")]
    InvalidInputReport(Box<report::Report>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        3
    }
}
