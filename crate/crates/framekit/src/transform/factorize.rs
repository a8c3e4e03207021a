//! Factorization of a family as the image of the canonical basis.
//!
//! Every finite family `(ψ_k)` in `C^d` is `(V δ_k)` for exactly one
//! operator `V : C^n → C^d` — the synthesis matrix read as an operator on
//! the canonical basis `(δ_k)`. The family's class is mirrored in operator
//! properties of `V`: bounded ↔ Bessel, surjective ↔ frame, bijective ↔
//! Riesz basis, injective with bounded inverse ↔ Riesz–Fischer, closed
//! range ↔ frame sequence, dense range ↔ complete.

use serde::Serialize;

use crate::linalg::{svd, Tolerance};
use crate::linalg::Matrix;
use crate::sequence::FiniteSequence;

use crate::classify::{classify_finite, ClassLabel, FrameBounds};

use super::predict::apply_operator;

/// One correspondence line: the operator condition on `V`, whether it holds,
/// and whether the classifier's verdict for the matching label agrees.
#[derive(Debug, Clone, Serialize)]
pub struct PropertyCheck {
    pub label: ClassLabel,
    pub condition: String,
    pub holds: bool,
    pub classifier_holds: bool,
    pub matches: bool,
    pub bounds: FrameBounds,
}

/// The factorization `ψ_k = V δ_k` with its property report.
#[derive(Debug, Clone, Serialize)]
pub struct FactorizationReport {
    pub properties: Vec<PropertyCheck>,
    /// `max_k ‖V δ_k − ψ_k‖`: zero up to representation, since `V` *is* the
    /// synthesis matrix.
    pub round_trip_residual: f64,
    /// Every property line matches the classifier.
    pub all_match: bool,
}

/// Returns the factorizing operator `V` (the synthesis matrix viewed as an
/// operator on the canonical basis of `C^n`) and the property report.
pub fn factorize_via_onb(seq: &FiniteSequence, tol: &Tolerance) -> (Matrix, FactorizationReport) {
    let v = seq.synthesis_matrix();
    let d = seq.dimension();
    let n = seq.len();

    let res = svd(&v).expect("synthesis matrix has positive dimensions");
    let cutoff = tol.rank_cutoff(res.sigma_max());
    let rank = res.rank_above(cutoff);
    let surjective = rank == d;
    let injective = rank == n;
    let norm = res.sigma_max();
    let smallest_retained = res
        .singular_values()
        .iter()
        .copied()
        .filter(|&s| s > cutoff)
        .fold(f64::NAN, f64::min);

    let report = classify_finite(seq, *tol);
    let mut properties = Vec::new();
    let mut push = |label: ClassLabel, condition: &str, holds: bool, bounds: FrameBounds| {
        let classifier_holds = report.holds(label) == Some(true);
        properties.push(PropertyCheck {
            label,
            condition: condition.into(),
            holds,
            classifier_holds,
            matches: holds == classifier_holds,
            bounds,
        });
    };

    let upper = crate::ext_real::ExtReal::finite(norm * norm);
    push(
        ClassLabel::Bessel,
        "V bounded, ‖V‖ = √B",
        true,
        FrameBounds::upper_only(upper, true),
    );
    push(
        ClassLabel::FrameSequence,
        "V has closed range",
        rank > 0,
        if rank > 0 {
            FrameBounds::both(
                crate::ext_real::ExtReal::finite(smallest_retained * smallest_retained),
                upper,
                true,
            )
        } else {
            FrameBounds::none()
        },
    );
    push(
        ClassLabel::Frame,
        "V bounded and surjective",
        surjective,
        if surjective {
            FrameBounds::both(
                crate::ext_real::ExtReal::finite(square(res.singular_values()[d - 1])),
                upper,
                true,
            )
        } else {
            FrameBounds::none()
        },
    );
    push(
        ClassLabel::RieszBasis,
        "V bounded and bijective",
        surjective && injective,
        if surjective && injective {
            FrameBounds::both(
                crate::ext_real::ExtReal::finite(square(res.singular_values()[d - 1])),
                upper,
                true,
            )
        } else {
            FrameBounds::none()
        },
    );
    push(
        ClassLabel::RieszFischer,
        "V injective with bounded inverse on ran(V)",
        injective,
        if injective {
            FrameBounds::lower_only(
                crate::ext_real::ExtReal::finite(square(res.singular_values()[n - 1])),
                true,
            )
        } else {
            FrameBounds::none()
        },
    );
    push(
        ClassLabel::Complete,
        "ran(V) dense (full row rank)",
        surjective,
        FrameBounds::none(),
    );

    // Re-synthesize the family through V and measure the residual.
    let image = apply_operator(&v, &FiniteSequence::canonical_onb(n))
        .expect("V maps C^n into C^d by construction");
    let residual = image
        .vectors()
        .iter()
        .zip(seq.vectors())
        .map(|(a, b)| {
            a.iter()
                .zip(b)
                .map(|(x, y)| (x - y).norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);

    let all_match = properties.iter().all(|p| p.matches);
    (
        v,
        FactorizationReport {
            properties,
            round_trip_residual: residual,
            all_match,
        },
    )
}

fn square(x: f64) -> f64 {
    x * x
}
