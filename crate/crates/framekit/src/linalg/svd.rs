//! Singular value decomposition by one-sided Jacobi rotations.
//!
//! One-sided Jacobi orthogonalizes the columns of the input by unitary plane
//! rotations applied from the right. It is slow compared to bidiagonal QR but
//! simple, deterministic (fixed row-cyclic sweep order, no randomization), and
//! accurate to the last bits for the desk-scale matrices this crate targets.

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::matrix::{inner_product, vector_norm, Matrix};

/// Relative off-diagonal threshold below which a column pair counts as
/// orthogonal: rotations stop once `|⟨a_p, a_q⟩| ≤ 1e-13 · ‖a_p‖‖a_q‖`
/// for every pair.
const CONVERGENCE_REL: f64 = 1e-13;
/// Sweep cap; cyclic Jacobi on well-scaled desk matrices converges in well
/// under ten sweeps.
const MAX_SWEEPS: usize = 60;

/// Thin SVD `M = U · diag(σ) · Vᴴ` with `r = min(rows, cols)` columns on
/// each side.
#[derive(Debug, Clone)]
pub struct SvdResult {
    left_vectors: Matrix,
    singular_values: Vec<f64>,
    right_vectors: Matrix,
}

impl SvdResult {
    /// Left singular vectors, `rows x r` with orthonormal columns.
    pub fn left_vectors(&self) -> &Matrix {
        &self.left_vectors
    }

    /// Singular values, nonincreasing and nonnegative, length `min(rows, cols)`.
    pub fn singular_values(&self) -> &[f64] {
        &self.singular_values
    }

    /// Right singular vectors, `cols x r` with orthonormal columns.
    pub fn right_vectors(&self) -> &Matrix {
        &self.right_vectors
    }

    pub fn sigma_max(&self) -> f64 {
        self.singular_values.first().copied().unwrap_or(0.0)
    }

    pub fn sigma_min(&self) -> f64 {
        self.singular_values.last().copied().unwrap_or(0.0)
    }

    /// Number of singular values strictly above `cutoff`.
    pub fn rank_above(&self, cutoff: f64) -> usize {
        self.singular_values.iter().filter(|&&s| s > cutoff).count()
    }

    /// `U · diag(σ) · Vᴴ`, for residual checks.
    pub fn reconstruct(&self) -> Matrix {
        let r = self.singular_values.len();
        let mut scaled = self.left_vectors.clone();
        for j in 0..r {
            let s = self.singular_values[j];
            for i in 0..scaled.rows() {
                scaled[(i, j)] *= s;
            }
        }
        scaled.mul(&self.right_vectors.adjoint())
    }
}

/// Computes the thin SVD. Zero-dimension matrices are rejected.
pub fn svd(m: &Matrix) -> Result<SvdResult> {
    if m.rows() == 0 || m.cols() == 0 {
        return Err(Error::InvalidInput(format!(
            "cannot factor a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    if m.rows() >= m.cols() {
        let (u, s, v) = jacobi_tall(m);
        Ok(SvdResult {
            left_vectors: u,
            singular_values: s,
            right_vectors: v,
        })
    } else {
        // Wide case: factor the adjoint and swap the roles of U and V.
        let (u, s, v) = jacobi_tall(&m.adjoint());
        Ok(SvdResult {
            left_vectors: v,
            singular_values: s,
            right_vectors: u,
        })
    }
}

/// Operator norm `‖M‖ = σ_max`.
pub fn operator_norm(m: &Matrix) -> Result<f64> {
    Ok(svd(m)?.sigma_max())
}

/// One-sided Jacobi on a tall (rows ≥ cols) matrix. Returns `(U, σ, V)` with
/// `U` of size rows x cols, `V` of size cols x cols.
fn jacobi_tall(m: &Matrix) -> (Matrix, Vec<f64>, Matrix) {
    let rows = m.rows();
    let n = m.cols();
    let mut work: Vec<Vec<Complex64>> = m.columns();
    let mut v: Vec<Vec<Complex64>> = Matrix::identity(n).columns();

    for _sweep in 0..MAX_SWEEPS {
        // Deflation: a column that has collapsed below roundoff of the
        // largest column is numerically zero. Rotating it further only
        // erodes the unitarity of the accumulated V, so zero it outright;
        // its left vector comes from the completion step below.
        let max_norm_sq = work
            .iter()
            .map(|col| col.iter().map(|z| z.norm_sqr()).sum::<f64>())
            .fold(0.0, f64::max);
        let deflate_below = max_norm_sq * 1e-30;
        for col in work.iter_mut() {
            let norm_sq = col.iter().map(|z| z.norm_sqr()).sum::<f64>();
            if norm_sq > 0.0 && norm_sq <= deflate_below {
                for z in col.iter_mut() {
                    *z = Complex64::new(0.0, 0.0);
                }
            }
        }

        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha = work[p].iter().map(|z| z.norm_sqr()).sum::<f64>();
                let beta = work[q].iter().map(|z| z.norm_sqr()).sum::<f64>();
                if alpha == 0.0 || beta == 0.0 {
                    continue;
                }
                let gamma = inner_product(&work[q], &work[p]); // a_pᴴ · a_q
                let off = gamma.norm();
                if off <= CONVERGENCE_REL * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;

                // Phase that makes the 2x2 column Gram real, then a classical
                // real Jacobi rotation on [[α, |γ|], [|γ|, β]].
                let phase = gamma / off; // e^{iφ}
                let zeta = (beta - alpha) / (2.0 * off);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;

                let phase_conj = phase.conj();
                for i in 0..rows {
                    let ap = work[p][i];
                    let aq = work[q][i];
                    work[p][i] = c * ap - s * (phase_conj * aq);
                    work[q][i] = s * ap + c * (phase_conj * aq);
                }
                for i in 0..n {
                    let vp = v[p][i];
                    let vq = v[q][i];
                    v[p][i] = c * vp - s * (phase_conj * vq);
                    v[q][i] = s * vp + c * (phase_conj * vq);
                }
            }
        }
        if !rotated {
            break;
        }
    }

    // Singular values are the column norms; sort descending with a stable
    // index tiebreak so results are reproducible.
    let mut order: Vec<usize> = (0..n).collect();
    let norms: Vec<f64> = work.iter().map(|col| vector_norm(col)).collect();
    order.sort_by(|&a, &b| norms[b].partial_cmp(&norms[a]).unwrap().then(a.cmp(&b)));

    let singular_values: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let sigma_max = singular_values.first().copied().unwrap_or(0.0);
    let negligible = sigma_max * 1e-14;

    let mut u_cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut pending_zero: Vec<usize> = Vec::new();
    for (slot, &j) in order.iter().enumerate() {
        if norms[j] > negligible && norms[j] > 0.0 {
            let inv = 1.0 / norms[j];
            u_cols.push(work[j].iter().map(|z| z * inv).collect());
        } else {
            u_cols.push(vec![Complex64::new(0.0, 0.0); rows]);
            pending_zero.push(slot);
        }
    }
    if !pending_zero.is_empty() {
        fill_orthonormal(&mut u_cols, &pending_zero, rows);
    }

    let u = Matrix::from_columns(rows, &u_cols).expect("jacobi produced finite columns");
    let v_cols: Vec<Vec<Complex64>> = order.iter().map(|&j| v[j].clone()).collect();
    let v = Matrix::from_columns(n, &v_cols).expect("jacobi produced finite columns");
    (u, singular_values, v)
}

/// Replaces the columns at `slots` by vectors orthonormal to every other
/// column, chosen greedily from the canonical basis. Deterministic.
fn fill_orthonormal(cols: &mut [Vec<Complex64>], slots: &[usize], dim: usize) {
    for &slot in slots {
        let mut best: Option<(f64, Vec<Complex64>)> = None;
        for cand in 0..dim {
            let mut vec = vec![Complex64::new(0.0, 0.0); dim];
            vec[cand] = Complex64::new(1.0, 0.0);
            // Two Gram-Schmidt passes keep the completion orthogonal to
            // working precision. Unfilled slots still hold zero columns and
            // drop out via the norm check.
            for _ in 0..2 {
                for (k, col) in cols.iter().enumerate() {
                    if k == slot || vector_norm(col) == 0.0 {
                        continue;
                    }
                    let coeff = inner_product(&vec, col);
                    for i in 0..dim {
                        vec[i] -= coeff * col[i];
                    }
                }
            }
            let norm = vector_norm(&vec);
            if best.as_ref().map_or(true, |(bn, _)| norm > *bn) {
                best = Some((norm, vec));
            }
        }
        let (norm, mut vec) = best.expect("dimension is positive");
        assert!(
            norm > 1e-8,
            "failed to complete an orthonormal basis (residual {norm})"
        );
        let inv = 1.0 / norm;
        for z in &mut vec {
            *z *= inv;
        }
        cols[slot] = vec;
    }
}

/// Completes the orthonormal columns of `basis` (d x k) to a full orthonormal
/// basis of `C^d` and returns the d x (d−k) completion.
pub(crate) fn orthonormal_complement_of(basis: &Matrix) -> Matrix {
    let dim = basis.rows();
    let k = basis.cols();
    if k >= dim {
        return Matrix::zeros(dim, 0);
    }
    let mut cols = basis.columns();
    let start = cols.len();
    cols.extend(std::iter::repeat(vec![Complex64::new(0.0, 0.0); dim]).take(dim - k));
    let slots: Vec<usize> = (start..dim).collect();
    fill_orthonormal(&mut cols, &slots, dim);
    Matrix::from_columns(dim, &cols[start..]).expect("completion is finite")
}
