use alloc::string::String;
use core::ops::Range;

use serde::{Deserialize, Serialize};

/// Outcome of checking one relation on a finite truncation.
///
/// `max_residual` is scaled per entry by `max(1, Σ|terms|)`, so it reads as a
/// relative error for large entries and an absolute one for small entries.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub relation_id: String,
    pub max_residual: f64,
    pub rows_checked: Range<usize>,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(
        relation_id: impl Into<String>,
        max_residual: f64,
        rows_checked: Range<usize>,
        tolerance: f64,
    ) -> Self {
        Self {
            relation_id: relation_id.into(),
            max_residual,
            rows_checked,
            tolerance,
            pass: max_residual <= tolerance,
        }
    }
}

/// Residual `|x|` scaled by `max(1, scale)`; NaN propagates as a failure.
pub(crate) fn scaled(x: f64, scale: f64) -> f64 {
    let r = x.abs() / scale.abs().max(1.0);
    if r.is_nan() {
        f64::INFINITY
    } else {
        r
    }
}
