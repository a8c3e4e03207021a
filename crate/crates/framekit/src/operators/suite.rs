//! Construction of the four operator matrices for a finite family.

use num_complex::Complex64;

use crate::linalg::{inner_product, Matrix, Tolerance};
use crate::sequence::FiniteSequence;

/// The four operators of a finite family as concrete matrices:
/// synthesis `D` (d x n), analysis `C = Dᴴ` (n x d), frame operator
/// `S = Σ ψ_k ψ_kᴴ` (d x d), and Gram `G` with `G[k,l] = ⟨ψ_l, ψ_k⟩` (n x n).
///
/// `C` is the exact entrywise conjugate transpose of `D` by construction;
/// `S` and `G` are built directly from the vectors and agree with `D·C` and
/// `C·D` up to floating-point accumulation order.
#[derive(Debug, Clone)]
pub struct OperatorSuite {
    synthesis: Matrix,
    analysis: Matrix,
    frame_op: Matrix,
    gram: Matrix,
    source: FiniteSequence,
    tol: Tolerance,
}

impl OperatorSuite {
    /// Synthesis matrix `D`, columns `ψ_k`.
    pub fn synthesis(&self) -> &Matrix {
        &self.synthesis
    }

    /// Analysis matrix `C = Dᴴ`.
    pub fn analysis(&self) -> &Matrix {
        &self.analysis
    }

    /// Frame operator `S = D·C`, Hermitian positive semidefinite.
    pub fn frame_op(&self) -> &Matrix {
        &self.frame_op
    }

    /// Gram matrix `G = C·D`.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn source(&self) -> &FiniteSequence {
        &self.source
    }

    pub fn tol(&self) -> &Tolerance {
        &self.tol
    }

    pub fn dimension(&self) -> usize {
        self.source.dimension()
    }

    pub fn len(&self) -> usize {
        self.source.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Builds the operator suite of a finite family.
pub fn build_suite(seq: &FiniteSequence, tol: Tolerance) -> OperatorSuite {
    let d = seq.dimension();
    let n = seq.len();
    let synthesis = seq.synthesis_matrix();
    let analysis = synthesis.adjoint();

    // S = Σ_k ψ_k ψ_kᴴ, accumulated as outer products; exactly Hermitian
    // entrywise because each outer product is.
    let mut frame_op = Matrix::zeros(d, d);
    for psi in seq.vectors() {
        for i in 0..d {
            for j in 0..d {
                frame_op[(i, j)] += psi[i] * psi[j].conj();
            }
        }
    }

    // G[k, l] = ⟨ψ_l, ψ_k⟩
    let mut gram = Matrix::zeros(n, n);
    for k in 0..n {
        for l in 0..n {
            gram[(k, l)] = inner_product(seq.vector(l), seq.vector(k));
        }
    }

    OperatorSuite {
        synthesis,
        analysis,
        frame_op,
        gram,
        source: seq.clone(),
        tol,
    }
}

/// Applies the frame operator to a vector without forming `S`:
/// `Σ_k ⟨f, ψ_k⟩ ψ_k`. Used by Rayleigh-quotient cross-checks.
pub fn frame_apply_direct(seq: &FiniteSequence, f: &[Complex64]) -> Vec<Complex64> {
    assert_eq!(f.len(), seq.dimension());
    let mut out = vec![Complex64::new(0.0, 0.0); seq.dimension()];
    for psi in seq.vectors() {
        let coeff = inner_product(f, psi);
        for (o, p) in out.iter_mut().zip(psi) {
            *o += coeff * p;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol_for(seq: &FiniteSequence) -> Tolerance {
        Tolerance::for_dims(seq.dimension(), seq.len())
    }

    #[test]
    fn canonical_basis_gives_identity_everywhere() {
        let seq = FiniteSequence::canonical_onb(2);
        let suite = build_suite(&seq, tol_for(&seq));
        for m in [
            suite.synthesis(),
            suite.analysis(),
            suite.frame_op(),
            suite.gram(),
        ] {
            assert!(m.sub(&Matrix::identity(2)).frobenius_norm() == 0.0);
        }
    }

    #[test]
    fn duplicated_vector_family_matches_hand_computation() {
        // (e1, e1, e2) in C²: S = diag(2, 1); G = [[1,1,0],[1,1,0],[0,0,1]]
        let seq =
            FiniteSequence::from_real(2, &[&[1.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]]).unwrap();
        let suite = build_suite(&seq, tol_for(&seq));

        let s = suite.frame_op();
        assert_eq!(s[(0, 0)].re, 2.0);
        assert_eq!(s[(1, 1)].re, 1.0);
        assert_eq!(s[(0, 1)].norm(), 0.0);

        let g = suite.gram();
        let expected = [
            [1.0, 1.0, 0.0],
            [1.0, 1.0, 0.0],
            [0.0, 0.0, 1.0],
        ];
        for k in 0..3 {
            for l in 0..3 {
                assert_eq!(g[(k, l)].re, expected[k][l], "G[{k},{l}]");
                assert_eq!(g[(k, l)].im, 0.0);
            }
        }
    }

    #[test]
    fn single_scaled_vector() {
        let seq = FiniteSequence::from_real(1, &[&[2.0]]).unwrap();
        let suite = build_suite(&seq, tol_for(&seq));
        assert_eq!(suite.frame_op()[(0, 0)].re, 4.0);
        assert_eq!(suite.gram()[(0, 0)].re, 4.0);
    }

    #[test]
    fn analysis_is_exact_adjoint() {
        let seq = FiniteSequence::new(
            2,
            vec![
                vec![Complex64::new(1.0, 2.0), Complex64::new(-0.5, 0.25)],
                vec![Complex64::new(0.0, -1.0), Complex64::new(3.0, 0.0)],
            ],
            None,
        )
        .unwrap();
        let suite = build_suite(&seq, tol_for(&seq));
        let defect = suite
            .analysis()
            .sub(&suite.synthesis().adjoint())
            .max_abs_entry();
        assert_eq!(defect, 0.0);
    }

    #[test]
    fn direct_frame_apply_matches_matrix() {
        let seq =
            FiniteSequence::from_real(2, &[&[1.0, 1.0], &[0.0, 2.0], &[1.0, 0.0]]).unwrap();
        let suite = build_suite(&seq, tol_for(&seq));
        let f = vec![Complex64::new(0.3, -0.7), Complex64::new(1.1, 0.2)];
        let via_matrix = suite.frame_op().mat_vec(&f);
        let direct = frame_apply_direct(&seq, &f);
        for (a, b) in via_matrix.iter().zip(&direct) {
            assert!((a - b).norm() < 1e-14);
        }
    }
}
