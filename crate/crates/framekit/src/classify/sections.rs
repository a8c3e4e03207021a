//! The Gram-sections test for Riesz–Fischer sequences.
//!
//! A sequence is Riesz–Fischer with bound `A` exactly when every leading
//! principal section `G_n` of its Gram matrix satisfies `A‖c‖ ≤ ‖G_n c‖`,
//! i.e. `A_est = min_n σ_min(G_n)` stays positive. By Cauchy interlacing the
//! per-section minima are nonincreasing, so `A_est` equals `σ_min` of the
//! full Gram matrix.

use serde::Serialize;

use crate::linalg::{hermitian_eigen, Tolerance};
use crate::sequence::FiniteSequence;

use crate::operators::build_suite;

#[derive(Debug, Clone, Serialize)]
pub struct SectionsResult {
    /// `min_n σ_min(G_n)`.
    pub a_est: f64,
    /// `σ_min(G_n)` for `n = 1..=len`.
    pub per_section: Vec<f64>,
    /// `a_est` above the rank threshold of the full Gram matrix.
    pub is_riesz_fischer: bool,
    /// `a_est` within 10% of the threshold.
    pub borderline: bool,
}

pub fn riesz_fischer_via_sections(seq: &FiniteSequence, tol: Tolerance) -> SectionsResult {
    let gram = build_suite(seq, tol).gram().clone();
    let n = gram.rows();

    let mut per_section = Vec::with_capacity(n);
    for k in 1..=n {
        let section = gram.leading_principal(k);
        let eig = hermitian_eigen(&section).expect("sections are square and nonempty");
        // PSD up to roundoff: clamp stray negatives.
        per_section.push(eig.lambda_min().max(0.0));
    }
    let a_est = per_section.iter().copied().fold(f64::INFINITY, f64::min);

    let lambda_max = hermitian_eigen(&gram)
        .expect("gram is square and nonempty")
        .lambda_max()
        .max(0.0);
    let cutoff = tol.rank_cutoff(lambda_max);
    SectionsResult {
        a_est,
        per_section,
        is_riesz_fischer: a_est > cutoff,
        borderline: tol.is_borderline(a_est, lambda_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol_for(seq: &FiniteSequence) -> Tolerance {
        Tolerance::for_dims(seq.dimension(), seq.len())
    }

    #[test]
    fn canonical_basis_sections_are_all_one() {
        let seq = FiniteSequence::canonical_onb(3);
        let res = riesz_fischer_via_sections(&seq, tol_for(&seq));
        assert_eq!(res.per_section.len(), 3);
        for &s in &res.per_section {
            assert!((s - 1.0).abs() < 1e-12);
        }
        assert!((res.a_est - 1.0).abs() < 1e-12);
        assert!(res.is_riesz_fischer);
    }

    #[test]
    fn duplicated_vector_kills_the_sections_bound() {
        // (e1, e1, e2): G_2 = [[1,1],[1,1]] has eigenvalues {2, 0}.
        let seq =
            FiniteSequence::from_real(2, &[&[1.0, 0.0], &[1.0, 0.0], &[0.0, 1.0]]).unwrap();
        let res = riesz_fischer_via_sections(&seq, tol_for(&seq));
        assert!(res.per_section[0] > 0.9);
        assert!(res.per_section[1] < 1e-12);
        assert!(res.a_est < 1e-12);
        assert!(!res.is_riesz_fischer);
    }

    #[test]
    fn diagonal_family_bound_matches_smallest_squared_norm() {
        // (2e1, e2): sections diag(4), diag(4,1) → A_est = 1 = σ_min(D)².
        let seq = FiniteSequence::from_real(2, &[&[2.0, 0.0], &[0.0, 1.0]]).unwrap();
        let res = riesz_fischer_via_sections(&seq, tol_for(&seq));
        assert!((res.per_section[0] - 4.0).abs() < 1e-12);
        assert!((res.per_section[1] - 1.0).abs() < 1e-12);
        assert!((res.a_est - 1.0).abs() < 1e-12);
        assert!(res.is_riesz_fischer);
    }

    #[test]
    fn sections_are_nonincreasing() {
        let seq = FiniteSequence::from_real(
            3,
            &[&[1.0, 0.2, 0.0], &[0.3, 1.0, 0.1], &[0.0, 0.4, 0.9], &[0.5, 0.5, 0.5]],
        )
        .unwrap();
        let res = riesz_fischer_via_sections(&seq, tol_for(&seq));
        for w in res.per_section.windows(2) {
            assert!(w[1] <= w[0] + 1e-12, "{:?}", res.per_section);
        }
    }
}
