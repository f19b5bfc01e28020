use thiserror::Error;

use crate::lattice::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse {input:?} as a rational: {reason}")]
    Parse { input: String, reason: String },

    #[error("malformed model file: {0}")]
    ModelFile(String),

    #[error("invalid model: {}", .0.first_failure().map(|c| c.to_string()).unwrap_or_default())]
    InvalidModel(ValidationReport),

    #[error("the zero class has no certificate")]
    ZeroClass,

    #[error("class ({0}, {1}) lies outside the Mori cone")]
    OutsideCone(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
