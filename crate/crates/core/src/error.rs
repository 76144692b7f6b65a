//! Error types shared across the crate.

use thiserror::Error;

/// Configuration loading and validation failures.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid value for `{field}`: {reason}")]
    Invalid { field: String, reason: String },
    #[error("failed to parse config: {0}")]
    Parse(String),
    #[error("io error reading config: {0}")]
    Io(#[from] std::io::Error),
}

impl ConfigError {
    pub fn invalid(field: &str, reason: impl Into<String>) -> Self {
        ConfigError::Invalid {
            field: field.to_string(),
            reason: reason.into(),
        }
    }

    /// Name of the offending field, when the error is a validation failure.
    pub fn field(&self) -> Option<&str> {
        match self {
            ConfigError::Invalid { field, .. } => Some(field),
            _ => None,
        }
    }
}

/// Simulation-domain failures.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("m + p_n must be positive")]
    ZeroFluency,
    #[error("frame {frame_index} was generated under a different config (digest {found}, expected {expected})")]
    DigestMismatch {
        frame_index: u32,
        expected: String,
        found: String,
    },
}

/// Model fitting failures. Non-convergence is not an error (the best-so-far
/// model is returned flagged); these are the genuinely unrecoverable cases.
#[derive(Debug, Error)]
pub enum FitError {
    #[error("frame has too few detections for a profile fit ({count} < {required})")]
    DegenerateFrame { count: usize, required: usize },
    #[error("fit window does not fit inside the map ({side} needed, {available} available)")]
    WindowTooLarge { side: usize, available: usize },
}

/// Cross-correlation failures.
#[derive(Debug, Error)]
pub enum XcorrError {
    #[error("image dimensions differ: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
}

/// EPR metric failures.
#[derive(Debug, Error)]
pub enum EprError {
    #[error("operation requires a {expected:?}-plane record, got {found:?}")]
    PlaneMismatch {
        expected: crate::frame::Plane,
        found: crate::frame::Plane,
    },
    #[error("need at least {required} samples for a {level} confidence interval, got {count}")]
    InsufficientSamples {
        required: usize,
        count: usize,
        level: f64,
    },
    #[error("envelope support mask is empty")]
    EmptySupport,
}

/// PGM decode failures.
#[derive(Debug, Error)]
pub enum PgmError {
    #[error("{path}: {reason}")]
    Malformed { path: String, reason: String },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}
