//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::mesh::SchemeId;
use crate::transforms::TransformId;

/// Errors raised while building meshes, certifying bounds or evaluating sums.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SincError {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("argument {x} lies outside the image interval of {id}")]
    Domain { id: TransformId, x: f64 },

    #[error("{0} has no elementary inverse; it is supported for quadrature only")]
    UnsupportedTransform(TransformId),

    #[error("no explicit error constant is known for {0}")]
    NoCertificate(SchemeId),

    #[error("scheme {scheme} cannot be combined with transform {id}: {reason}")]
    Mismatch {
        scheme: SchemeId,
        id: TransformId,
        reason: &'static str,
    },

    #[error("n = {n} violates the side conditions required by {scheme}")]
    InvalidN { scheme: SchemeId, n: usize },

    #[error("integrand returned a non-finite value at k = {k} (t = {t})")]
    NonFiniteSample { k: i64, t: f64 },

    #[error("tolerance {tol:e} cannot be certified with n <= {n_cap}")]
    ToleranceUnreachable { tol: f64, n_cap: usize },
}

pub type Result<T> = std::result::Result<T, SincError>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> SincError {
    SincError::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
