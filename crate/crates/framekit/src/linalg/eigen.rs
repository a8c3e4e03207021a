//! Hermitian eigendecomposition by cyclic two-sided Jacobi rotations.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::matrix::Matrix;

const CONVERGENCE_REL: f64 = 1e-13;
const MAX_SWEEPS: usize = 60;

/// Eigendecomposition `H = Q · diag(λ) · Qᴴ` of a Hermitian matrix, with
/// real eigenvalues sorted descending.
#[derive(Debug, Clone)]
pub struct EigenResult {
    values: Vec<f64>,
    vectors: Matrix,
}

impl EigenResult {
    /// Eigenvalues, descending. Signed: a negative value really is negative,
    /// unlike a singular value.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Unitary matrix of eigenvectors (columns), matching `values` order.
    pub fn vectors(&self) -> &Matrix {
        &self.vectors
    }

    pub fn lambda_max(&self) -> f64 {
        self.values.first().copied().unwrap_or(0.0)
    }

    pub fn lambda_min(&self) -> f64 {
        self.values.last().copied().unwrap_or(0.0)
    }
}

/// Eigendecomposition of the Hermitian part `(M + Mᴴ)/2`. Callers feed
/// matrices that are Hermitian by construction; the symmetrization only
/// removes rounding noise.
pub fn hermitian_eigen(m: &Matrix) -> Result<EigenResult> {
    if !m.is_square() {
        return Err(Error::InvalidInput(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Err(Error::InvalidInput("cannot factor a 0x0 matrix".into()));
    }

    let mut h = m.adjoint();
    for i in 0..n {
        for j in 0..n {
            h[(i, j)] = 0.5 * (h[(i, j)] + m[(i, j)]);
        }
    }
    let mut q = Matrix::identity(n);

    for _sweep in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for qi in (p + 1)..n {
                let hpq = h[(p, qi)];
                let off = hpq.norm();
                let scale = 0.5 * (h[(p, p)].norm() + h[(qi, qi)].norm());
                if off <= CONVERGENCE_REL * scale || off == 0.0 {
                    continue;
                }
                rotated = true;

                let phase = hpq / off; // e^{iφ}
                let a = h[(p, p)].re;
                let b = h[(qi, qi)].re;
                let zeta = (b - a) / (2.0 * off);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                let phase_conj = phase.conj();

                // Columns p, q: H ← H·J with J = [[c, s],[−s·conj(φ), c·conj(φ)]]
                for i in 0..n {
                    let hp = h[(i, p)];
                    let hq = h[(i, qi)];
                    h[(i, p)] = c * hp - s * (phase_conj * hq);
                    h[(i, qi)] = s * hp + c * (phase_conj * hq);
                }
                // Rows p, q: H ← Jᴴ·H
                for j in 0..n {
                    let hp = h[(p, j)];
                    let hq = h[(qi, j)];
                    h[(p, j)] = c * hp - s * (phase * hq);
                    h[(qi, j)] = s * hp + c * (phase * hq);
                }
                h[(p, qi)] = Complex64::new(0.0, 0.0);
                h[(qi, p)] = Complex64::new(0.0, 0.0);
                h[(p, p)] = Complex64::new(h[(p, p)].re, 0.0);
                h[(qi, qi)] = Complex64::new(h[(qi, qi)].re, 0.0);

                for i in 0..n {
                    let qp = q[(i, p)];
                    let qq = q[(i, qi)];
                    q[(i, p)] = c * qp - s * (phase_conj * qq);
                    q[(i, qi)] = s * qp + c * (phase_conj * qq);
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| h[(i, i)].re).collect();
    order.sort_by(|&a, &b| diag[b].partial_cmp(&diag[a]).unwrap().then(a.cmp(&b)));

    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let cols: Vec<Vec<Complex64>> = order.iter().map(|&i| q.column(i)).collect();
    let vectors = Matrix::from_columns(n, &cols).expect("rotations keep entries finite");
    Ok(EigenResult { values, vectors })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_is_its_own_spectrum() {
        let m = Matrix::from_real(3, 3, &[3.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, 2.0]).unwrap();
        let e = hermitian_eigen(&m).unwrap();
        assert!((e.values()[0] - 3.0).abs() < 1e-13);
        assert!((e.values()[1] - 2.0).abs() < 1e-13);
        assert!((e.values()[2] + 1.0).abs() < 1e-13);
    }

    #[test]
    fn signed_eigenvalues_of_swap_matrix() {
        let m = Matrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap();
        let e = hermitian_eigen(&m).unwrap();
        assert!((e.values()[0] - 1.0).abs() < 1e-13);
        assert!((e.values()[1] + 1.0).abs() < 1e-13);
    }

    #[test]
    fn complex_hermitian_reconstruction() {
        let m = Matrix::new(
            2,
            2,
            vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(3.0, 0.0)],
        )
        .unwrap();
        let e = hermitian_eigen(&m).unwrap();
        // eigenvalues of [[2, i], [-i, 3]]: (5 ± √5)/2
        let disc = 5f64.sqrt();
        assert!((e.values()[0] - (5.0 + disc) / 2.0).abs() < 1e-12);
        assert!((e.values()[1] - (5.0 - disc) / 2.0).abs() < 1e-12);

        let mut rebuilt = Matrix::zeros(2, 2);
        for k in 0..2 {
            let col = e.vectors().column(k);
            for i in 0..2 {
                for j in 0..2 {
                    rebuilt[(i, j)] += e.values()[k] * col[i] * col[j].conj();
                }
            }
        }
        assert!(m.sub(&rebuilt).frobenius_norm() < 1e-12);
    }

    #[test]
    fn non_square_rejected() {
        let m = Matrix::zeros(2, 3);
        assert!(hermitian_eigen(&m).is_err());
    }
}
