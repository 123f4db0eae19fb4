//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the simulator library.
#[derive(Debug, Error)]
pub enum Error {
    /// A frequency query outside the supported table band. The model has no
    /// support outside its tabulated range, so this is an error rather than
    /// an extrapolation.
    #[error("frequency {f_ghz} GHz is outside the supported band [{f_lo_ghz}, {f_hi_ghz}] GHz")]
    OutOfBand {
        f_ghz: f64,
        f_lo_ghz: f64,
        f_hi_ghz: f64,
    },

    /// Geometry that makes a field evaluation singular (coincident points).
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),

    /// A named input field failed validation.
    #[error("invalid `{field}`: {message}")]
    Validation { field: String, message: String },

    /// A scenario file failed to parse.
    #[error("parse error in {path}: {message}")]
    Parse { path: String, message: String },

    /// An underlying I/O failure.
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn validation(field: &str, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.to_string(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
