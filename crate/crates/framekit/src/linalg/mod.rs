//! Dense complex-matrix kernel.
//!
//! Everything here is deterministic: the SVD and eigendecomposition use
//! fixed-order cyclic Jacobi sweeps, and no routine draws randomness. Target
//! scale is dense matrices up to roughly 2048 x 2048; no sparse or iterative
//! paths.

mod eigen;
mod matrix;
mod pinv;
mod subspace;
mod svd;

pub use eigen::{hermitian_eigen, EigenResult};
pub use matrix::{inner_product, vector_norm, Matrix, MatrixJson};
pub use pinv::{numerical_rank, pseudo_inverse, pseudo_inverse_norm};
pub use subspace::{
    containment_angle, equality_angle, orthonormal_complement, subspace_basis, Subspace,
};
pub use svd::{operator_norm, svd, SvdResult};

use serde::Serialize;

use crate::error::{Error, Result};

/// Base factor for the dimension-scaled default rank cutoff.
const RANK_REL_BASE: f64 = 1e-10;
/// Default absolute residual threshold for identity checks.
const RESIDUAL_ABS_DEFAULT: f64 = 1e-9;

/// Numerical thresholds shared by rank decisions and identity checks.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tolerance {
    rank_rel: f64,
    residual_abs: f64,
}

impl Tolerance {
    /// Both thresholds must lie strictly inside `(0, 1)`.
    pub fn new(rank_rel: f64, residual_abs: f64) -> Result<Tolerance> {
        if !(rank_rel > 0.0 && rank_rel < 1.0) {
            return Err(Error::InvalidInput(format!(
                "rank_rel must be in (0, 1), got {rank_rel}"
            )));
        }
        if !(residual_abs > 0.0 && residual_abs < 1.0) {
            return Err(Error::InvalidInput(format!(
                "residual_abs must be in (0, 1), got {residual_abs}"
            )));
        }
        Ok(Tolerance {
            rank_rel,
            residual_abs,
        })
    }

    /// Default thresholds for a matrix of the given shape:
    /// `rank_rel = 1e-10 · max(rows, cols)`, `residual_abs = 1e-9`.
    pub fn for_dims(rows: usize, cols: usize) -> Tolerance {
        Tolerance {
            rank_rel: RANK_REL_BASE * rows.max(cols).max(1) as f64,
            residual_abs: RESIDUAL_ABS_DEFAULT,
        }
    }

    pub fn for_matrix(m: &Matrix) -> Tolerance {
        Tolerance::for_dims(m.rows(), m.cols())
    }

    pub fn rank_rel(&self) -> f64 {
        self.rank_rel
    }

    pub fn residual_abs(&self) -> f64 {
        self.residual_abs
    }

    /// Absolute singular-value cutoff for a spectrum with top value
    /// `sigma_max`: values at or below it are treated as zero.
    pub fn rank_cutoff(&self, sigma_max: f64) -> f64 {
        self.rank_rel * sigma_max
    }

    /// A singular value within 10% of the cutoff is genuinely ambiguous;
    /// reports carry this as a borderline flag instead of hiding it.
    pub fn is_borderline(&self, sigma: f64, sigma_max: f64) -> bool {
        let cutoff = self.rank_cutoff(sigma_max);
        cutoff > 0.0 && (sigma - cutoff).abs() <= 0.1 * cutoff
    }
}
