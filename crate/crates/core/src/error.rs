use thiserror::Error;

use crate::field::Field;
use crate::report::CheckReport;
use crate::tensor::Mor;

/// Errors raised by the workbench.
///
/// Mathematical failures of a checked identity are *not* errors: checkers
/// return a [`CheckReport`] with failing entries. Errors signal malformed
/// input (shapes, fields, scalars) or an operation whose precondition does
/// not hold.
#[derive(Debug, Error)]
pub enum WcpError {
    #[error("shape mismatch in {op}: {left} vs {right}")]
    ShapeMismatch {
        op: &'static str,
        left: String,
        right: String,
    },

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("invalid scalar `{text}`: {reason}")]
    InvalidScalar { text: String, reason: String },

    #[error("invalid object: {0}")]
    InvalidObject(String),

    #[error("entry ({row}, {col}) out of bounds for a {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("morphism is not idempotent: e∘e − e has {} nonzero entries", .residual.nnz())]
    NotIdempotent { residual: Box<Mor> },

    #[error("idempotent has a zero-dimensional image")]
    ZeroImage,

    #[error("precondition violated: {condition}")]
    PreconditionViolated {
        condition: String,
        report: Option<Box<CheckReport>>,
    },

    #[error("invariant failed in {context}: {}", .report.failed_names().join(", "))]
    InvariantFailed {
        context: String,
        report: Box<CheckReport>,
    },

    #[error("transported data violates: {}", .failed.join(", "))]
    TransportFailed {
        failed: Vec<String>,
        report: Box<CheckReport>,
    },

    #[error("convolution condition failed: f∗g differs from the unit composite")]
    ConvolutionFailed { report: Box<CheckReport> },

    #[error("invalid fixture parameter: {0}")]
    InvalidFixture(String),
}

impl WcpError {
    pub(crate) fn shape(op: &'static str, left: impl ToString, right: impl ToString) -> Self {
        WcpError::ShapeMismatch {
            op,
            left: left.to_string(),
            right: right.to_string(),
        }
    }

    pub(crate) fn precondition(condition: impl Into<String>, report: Option<CheckReport>) -> Self {
        WcpError::PreconditionViolated {
            condition: condition.into(),
            report: report.map(Box::new),
        }
    }

    /// True for malformed-input errors (shape, field, scalar, object).
    pub fn is_shape(&self) -> bool {
        matches!(
            self,
            WcpError::ShapeMismatch { .. }
                | WcpError::FieldMismatch(..)
                | WcpError::NotPrime(_)
                | WcpError::InvalidScalar { .. }
                | WcpError::InvalidObject(_)
                | WcpError::OutOfBounds { .. }
        )
    }

    /// The report attached to the error, if any.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            WcpError::PreconditionViolated { report, .. } => report.as_deref(),
            WcpError::InvariantFailed { report, .. }
            | WcpError::TransportFailed { report, .. }
            | WcpError::ConvolutionFailed { report } => Some(report),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, WcpError>;
