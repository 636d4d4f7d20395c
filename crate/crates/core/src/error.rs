use thiserror::Error;

use crate::qstate::ValidationReport;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(
        "non-physical Bell-diagonal parameters ({c1}, {c2}, {c3}): \
         Bell-basis eigenvalue {min_eigenvalue} is negative"
    )]
    NonPhysical {
        c1: f64,
        c2: f64,
        c3: f64,
        min_eigenvalue: f64,
    },

    #[error("{name} = {value} lies outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid density matrix: {0}")]
    InvalidDensity(#[from] ValidationReport),

    #[error("probability {value} lies outside [0, 1] beyond rounding tolerance")]
    Probability { value: f64 },

    #[error("basis is not orthonormal (deviation {deviation:e})")]
    NotOrthonormal { deviation: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Checks `lo <= value <= hi`, rejecting NaN.
pub(crate) fn check_range(name: &'static str, value: f64, lo: f64, hi: f64) -> Result<()> {
    if value >= lo && value <= hi {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value,
            min: lo,
            max: hi,
        })
    }
}
