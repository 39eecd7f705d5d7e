use thiserror::Error;

/// Errors produced by pool algebra, analytics, quadrature, simulation and
/// the text-format parsers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} must be strictly positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("{name} must be finite, got {value}")]
    NotFinite { name: &'static str, value: f64 },

    #[error("{name} = {value} is outside ({min}, {max})")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("parse error on line {line}: {detail}")]
    Parse { line: usize, detail: String },

    #[error("price path inconsistent with swap terms: {0}")]
    PathMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects non-finite and non-positive values for a named quantity.
pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NotFinite { name, value });
    }
    if value <= 0.0 {
        return Err(Error::NonPositive { name, value });
    }
    Ok(())
}

/// Like [`ensure_positive`] but admits zero.
pub(crate) fn ensure_non_negative(name: &'static str, value: f64) -> Result<()> {
    if !value.is_finite() {
        return Err(Error::NotFinite { name, value });
    }
    if value < 0.0 {
        return Err(Error::NonPositive { name, value });
    }
    Ok(())
}
