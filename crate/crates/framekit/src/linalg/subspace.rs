//! Orthonormal bases for ranges and nullspaces, and angle measures between
//! subspaces.
//!
//! Angles are computed through projection residuals (a sine-based formula):
//! near-zero angles come out at roundoff level instead of the ~1e-8 floor an
//! arccos of a computed cosine would impose.

use crate::error::Result;

use super::matrix::Matrix;
use super::svd::{orthonormal_complement_of, svd};
use super::Tolerance;

/// Which fundamental subspace of a matrix to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subspace {
    Range,
    Nullspace,
}

/// Orthonormal basis of the range or nullspace.
///
/// Range: left singular vectors with retained singular values. Nullspace:
/// right singular vectors with discarded singular values, extended by the
/// orthonormal complement of the full right-vector set for wide matrices.
/// A trivial subspace yields a matrix with zero columns.
pub fn subspace_basis(m: &Matrix, which: Subspace, tol: &Tolerance) -> Result<Matrix> {
    let res = svd(m)?;
    let cutoff = tol.rank_cutoff(res.sigma_max());
    let retained: Vec<usize> = (0..res.singular_values().len())
        .filter(|&j| res.singular_values()[j] > cutoff)
        .collect();
    match which {
        Subspace::Range => {
            let cols: Vec<_> = retained.iter().map(|&j| res.left_vectors().column(j)).collect();
            Matrix::from_columns(m.rows(), &cols)
        }
        Subspace::Nullspace => {
            let mut cols: Vec<_> = (0..res.singular_values().len())
                .filter(|j| !retained.contains(j))
                .map(|j| res.right_vectors().column(j))
                .collect();
            // For wide matrices the thin right-vector set spans only part of
            // the coefficient space; the rest of the complement is nullspace
            // as well.
            let extra = orthonormal_complement_of(res.right_vectors());
            cols.extend(extra.columns());
            Matrix::from_columns(m.cols(), &cols)
        }
    }
}

/// Orthonormal basis of the orthogonal complement of `span(basis)` in the
/// ambient space `C^rows`.
pub fn orthonormal_complement(basis: &Matrix) -> Matrix {
    orthonormal_complement_of(basis)
}

/// Largest principal angle between `span(inner)` and its projection onto
/// `span(outer)`: zero exactly when `span(inner) ⊆ span(outer)`.
///
/// Both arguments must have orthonormal columns and equal row counts.
pub fn containment_angle(inner: &Matrix, outer: &Matrix) -> f64 {
    assert_eq!(inner.rows(), outer.rows());
    if inner.cols() == 0 {
        return 0.0;
    }
    if outer.cols() == 0 {
        return std::f64::consts::FRAC_PI_2;
    }
    // residual = (I − Q_out Q_outᴴ) Q_in; sin of the largest angle is its
    // operator norm.
    let coeffs = outer.adjoint().mul(inner);
    let residual = inner.sub(&outer.mul(&coeffs));
    let sine = svd(&residual)
        .map(|r| r.sigma_max())
        .unwrap_or(0.0)
        .clamp(0.0, 1.0);
    sine.asin()
}

/// Largest principal angle between two subspaces viewed as equal candidates;
/// returns `π/2` when the dimensions differ.
pub fn equality_angle(a: &Matrix, b: &Matrix) -> f64 {
    if a.cols() != b.cols() {
        return std::f64::consts::FRAC_PI_2;
    }
    containment_angle(a, b).max(containment_angle(b, a))
}
