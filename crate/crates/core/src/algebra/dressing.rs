use alloc::vec::Vec;

use thiserror::Error;

use super::AlgebraParams;
use crate::qnum::f_number;
use crate::repcls::Family;
use crate::repmat::LadderMatrices;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DressingError {
    #[error("dressing is not invertible: F({n}) = {value}")]
    NonInvertibleDressing { n: i64, value: f64 },
    #[error("truncation dimension must be at least 1")]
    EmptyTruncation,
}

/// Undeformed Fock matrices: `b|n⟩ = √n|n−1⟩`, `N_b|n⟩ = n|n⟩`.
pub fn undeformed_fock(dim: usize) -> LadderMatrices {
    let n_values: Vec<f64> = (0..dim).map(|n| n as f64).collect();
    let weights: Vec<f64> = n_values.iter().map(|n| libm::sqrt(*n)).collect();
    LadderMatrices::from_weights(0, &n_values, &weights, Family::QuasiFock { nu0_prime: 0.0 })
}

/// `a = b·√(F(N_b)/N_b)` on the undeformed Fock space, so that
/// `a|n⟩ = √F(n)|n−1⟩`; the result is the `q`-Fock representation.
pub fn dress_from_undeformed(
    dim: usize,
    params: &AlgebraParams,
) -> Result<LadderMatrices, DressingError> {
    if dim == 0 {
        return Err(DressingError::EmptyTruncation);
    }
    let bare = undeformed_fock(dim);
    let mut factor = alloc::vec![0.0; dim];
    for (n, f) in factor.iter_mut().enumerate().skip(1) {
        let value = f_number(n as i64, params);
        if value.is_nan() || value <= f64::MIN_POSITIVE {
            return Err(DressingError::NonInvertibleDressing { n: n as i64, value });
        }
        *f = libm::sqrt(value / n as f64);
    }
    let a = bare.a.matmul(&crate::matrix::Matrix::diagonal(&factor));
    let a_plus = a.transpose();
    Ok(LadderMatrices { a, a_plus, ..bare })
}
