//! Numerical rank and Moore–Penrose pseudo-inverse via the SVD.

use crate::error::Result;

use super::matrix::Matrix;
use super::svd::svd;
use super::Tolerance;

/// Number of singular values above the relative rank cutoff. A zero matrix
/// has rank 0.
pub fn numerical_rank(m: &Matrix, tol: &Tolerance) -> Result<usize> {
    let res = svd(m)?;
    Ok(res.rank_above(tol.rank_cutoff(res.sigma_max())))
}

/// Moore–Penrose pseudo-inverse. Singular values at or below
/// `rank_rel · σ_max` are treated as zero; an all-zero matrix maps to the
/// zero matrix of transposed shape.
pub fn pseudo_inverse(m: &Matrix, tol: &Tolerance) -> Result<Matrix> {
    let res = svd(m)?;
    let cutoff = tol.rank_cutoff(res.sigma_max());
    let r = res.singular_values().len();

    // V · diag(1/σ retained) · Uᴴ
    let mut scaled = res.right_vectors().clone();
    for j in 0..r {
        let s = res.singular_values()[j];
        let inv = if s > cutoff { 1.0 / s } else { 0.0 };
        for i in 0..scaled.rows() {
            let v = scaled[(i, j)] * inv;
            scaled[(i, j)] = v;
        }
    }
    Ok(scaled.mul(&res.left_vectors().adjoint()))
}

/// `‖M†‖ = 1 / (smallest retained singular value)`; zero matrix gives 0.
pub fn pseudo_inverse_norm(m: &Matrix, tol: &Tolerance) -> Result<f64> {
    let res = svd(m)?;
    let cutoff = tol.rank_cutoff(res.sigma_max());
    let smallest_retained = res
        .singular_values()
        .iter()
        .copied()
        .filter(|&s| s > cutoff)
        .fold(f64::NAN, f64::min);
    if smallest_retained.is_nan() {
        Ok(0.0)
    } else {
        Ok(1.0 / smallest_retained)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_with_zero() {
        let m = Matrix::from_real(2, 2, &[2.0, 0.0, 0.0, 0.0]).unwrap();
        let tol = Tolerance::for_matrix(&m);
        let p = pseudo_inverse(&m, &tol).unwrap();
        assert!((p[(0, 0)].re - 0.5).abs() < 1e-14);
        assert!(p[(1, 1)].norm() < 1e-14);
        assert!(p[(0, 1)].norm() < 1e-14);
    }

    #[test]
    fn identity_is_self_inverse() {
        let m = Matrix::identity(3);
        let tol = Tolerance::for_matrix(&m);
        let p = pseudo_inverse(&m, &tol).unwrap();
        assert!(p.sub(&Matrix::identity(3)).frobenius_norm() < 1e-13);
    }

    #[test]
    fn single_column_least_squares() {
        // Hand-verified: pinv of the column (1,1)ᵀ is the row (0.5, 0.5).
        let m = Matrix::from_real(2, 1, &[1.0, 1.0]).unwrap();
        let tol = Tolerance::for_matrix(&m);
        let p = pseudo_inverse(&m, &tol).unwrap();
        assert_eq!((p.rows(), p.cols()), (1, 2));
        assert!((p[(0, 0)].re - 0.5).abs() < 1e-14);
        assert!((p[(0, 1)].re - 0.5).abs() < 1e-14);
        let mpm = m.mul(&p).mul(&m);
        assert!(mpm.sub(&m).frobenius_norm() <= 1e-12);
    }

    #[test]
    fn penrose_identities_on_rank_deficient_input() {
        let m = Matrix::from_real(3, 3, &[1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0]).unwrap();
        let tol = Tolerance::for_matrix(&m);
        assert_eq!(numerical_rank(&m, &tol).unwrap(), 1);
        let p = pseudo_inverse(&m, &tol).unwrap();
        assert!(m.mul(&p).mul(&m).sub(&m).frobenius_norm() < tol.residual_abs());
        assert!(p.mul(&m).mul(&p).sub(&p).frobenius_norm() < tol.residual_abs());
    }

    #[test]
    fn zero_matrix_maps_to_zero() {
        let m = Matrix::zeros(2, 3);
        let tol = Tolerance::for_matrix(&m);
        let p = pseudo_inverse(&m, &tol).unwrap();
        assert_eq!((p.rows(), p.cols()), (3, 2));
        assert_eq!(p.frobenius_norm(), 0.0);
        assert_eq!(pseudo_inverse_norm(&m, &tol).unwrap(), 0.0);
    }

    #[test]
    fn rank_counts() {
        let tol = Tolerance::for_dims(4, 4);
        assert_eq!(numerical_rank(&Matrix::identity(4), &tol).unwrap(), 4);
        let dup = Matrix::from_real(2, 2, &[1.0, 1.0, 0.0, 0.0]).unwrap();
        assert_eq!(numerical_rank(&dup, &Tolerance::for_matrix(&dup)).unwrap(), 1);
    }
}
