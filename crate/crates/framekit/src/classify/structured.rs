//! Classification of structured sequences from their analytic annotations.
//!
//! For `ψ_k = w_k e_{σ(k)}` the class criteria close over the annotations:
//!
//! - Bessel  ⟺  `sup_n s_n < ∞`, with `B = sup_n s_n`;
//! - lower frame sequence  ⟺  `inf_n s_n > 0` (over all `n`, counting
//!   directions missed by `σ` as zero), with `A = inf_n s_n`;
//! - frame  ⟺  both;
//! - complete  ⟺  `σ` surjective over nonzero-weight indices;
//! - Riesz–Fischer  ⟺  `σ` injective and `inf_k w_k² > 0`, with
//!   `A = inf_k w_k²`;
//! - Riesz basis  ⟺  frame with `σ` bijective.
//!
//! Each route reports only what its operator can see. In particular the
//! Gram route leaves completeness (and everything that needs it) undecided:
//! a shifted basis has the same Gram matrix as the basis itself, so no
//! Gram-only computation can decide completeness. The lower-frame-condition
//! column of the Gram route records the same gap as in the finite case.

use crate::linalg::Tolerance;
use crate::sequence::StructuredSequence;

use super::labels::{
    build_consensus, ClassLabel, ClassificationReport, FrameBounds, LabelVerdict,
};

/// Annotation-level verdicts shared by the operator routes.
struct AnnotationVerdicts {
    bessel: bool,
    lower_frame: bool,
    frame: bool,
    complete: bool,
    riesz_fischer: bool,
    riesz_basis: bool,
    /// `None` when the annotations cannot decide (non-injective σ with
    /// bounded fiber sums but no frame structure).
    frame_sequence: Option<bool>,
    bessel_bound: FrameBounds,
    lower_bound: FrameBounds,
    frame_bounds: FrameBounds,
    rf_bound: FrameBounds,
    frame_sequence_bounds: FrameBounds,
}

fn annotation_verdicts(s: &StructuredSequence) -> AnnotationVerdicts {
    let sup = s.sup_fiber_sum();
    let inf = s.inf_fiber_sum_all();
    let bessel = sup.is_finite();
    let lower_frame = inf.is_positive();
    let frame = bessel && lower_frame;
    let complete = s.sigma_surjective();
    let riesz_fischer = s.sigma_injective() && s.inf_weight_sq().is_positive();
    let riesz_basis = frame && s.sigma_injective() && s.sigma_surjective();

    // Frame for the closed span: with injective σ the family is an
    // orthogonal system with squared norms w_k², so the span bounds are
    // inf/sup of the weights. Without injectivity the annotations carry no
    // span-restricted infimum; only a sup-side failure or full frame
    // structure decides.
    let frame_sequence = if frame {
        Some(true)
    } else if s.sigma_injective() {
        Some(s.inf_weight_sq().is_positive() && bessel)
    } else if sup.is_infinite() {
        Some(false)
    } else {
        None
    };

    let bessel_bound = if bessel {
        FrameBounds::upper_only(sup, s.sup_attained())
    } else {
        FrameBounds::none()
    };
    let lower_bound = if lower_frame {
        FrameBounds::lower_only(inf, s.inf_attained())
    } else {
        FrameBounds::none()
    };
    let frame_bounds = if frame {
        FrameBounds::both(inf, sup, s.inf_attained() && s.sup_attained())
    } else {
        FrameBounds::none()
    };
    let rf_bound = if riesz_fischer {
        FrameBounds::lower_only(s.inf_weight_sq(), s.inf_weight_attained())
    } else {
        FrameBounds::none()
    };
    let frame_sequence_bounds = match frame_sequence {
        Some(true) if frame => frame_bounds,
        Some(true) => FrameBounds::both(
            s.inf_weight_sq(),
            sup,
            s.inf_weight_attained() && s.sup_attained(),
        ),
        _ => FrameBounds::none(),
    };

    AnnotationVerdicts {
        bessel,
        lower_frame,
        frame,
        complete,
        riesz_fischer,
        riesz_basis,
        frame_sequence,
        bessel_bound,
        lower_bound,
        frame_bounds,
        rf_bound,
        frame_sequence_bounds,
    }
}

fn frame_sequence_verdict(a: &AnnotationVerdicts, anchor: &str) -> LabelVerdict {
    match a.frame_sequence {
        Some(holds) => LabelVerdict::decided(
            ClassLabel::FrameSequence,
            holds,
            a.frame_sequence_bounds,
            anchor,
        ),
        None => LabelVerdict::undecided(
            ClassLabel::FrameSequence,
            "annotations carry no span-restricted fiber infimum",
        ),
    }
}

/// Classifies a structured sequence. Verdicts cite the deciding annotation;
/// bounds are extended reals and marked optimal only when the annotation
/// says the sup/inf is attained.
pub fn classify_structured(s: &StructuredSequence) -> ClassificationReport {
    let a = annotation_verdicts(s);

    // Analysis route: dom(C) = H ⟺ sup s_n < ∞; completeness and
    // injectivity of C are σ-surjectivity.
    let via_c = vec![
        LabelVerdict::decided(
            ClassLabel::Bessel,
            a.bessel,
            a.bessel_bound,
            "dom(C) = H ⟺ sup_n s_n < ∞",
        ),
        LabelVerdict::decided(
            ClassLabel::LowerFrameSequence,
            a.lower_frame,
            a.lower_bound,
            "C injective with closed range ⟺ inf_n s_n > 0",
        ),
        frame_sequence_verdict(&a, "ran(C) closed on the span"),
        LabelVerdict::decided(
            ClassLabel::Frame,
            a.frame,
            a.frame_bounds,
            "dom(C) = H, ran(C) closed, C injective",
        ),
        LabelVerdict::decided(
            ClassLabel::RieszBasis,
            a.riesz_basis,
            a.frame_bounds,
            "C bijective ⟺ frame with σ bijective",
        ),
        LabelVerdict::decided(
            ClassLabel::RieszFischer,
            a.riesz_fischer,
            a.rf_bound,
            "C surjective ⟺ σ injective with inf_k w_k² > 0",
        ),
        LabelVerdict::decided(
            ClassLabel::Complete,
            a.complete,
            FrameBounds::none(),
            "C injective ⟺ σ surjective",
        ),
    ];

    let via_d = vec![
        LabelVerdict::decided(
            ClassLabel::Bessel,
            a.bessel,
            a.bessel_bound,
            "dom(D) = ℓ² ⟺ sup_n s_n < ∞",
        ),
        LabelVerdict::decided(
            ClassLabel::LowerFrameSequence,
            a.lower_frame,
            a.lower_bound,
            "ran(D) dense with ran(D*) closed ⟺ inf_n s_n > 0",
        ),
        frame_sequence_verdict(&a, "ran(D) closed"),
        LabelVerdict::decided(
            ClassLabel::Frame,
            a.frame,
            a.frame_bounds,
            "D surjective",
        ),
        LabelVerdict::decided(
            ClassLabel::RieszBasis,
            a.riesz_basis,
            a.frame_bounds,
            "D bijective",
        ),
        LabelVerdict::decided(
            ClassLabel::RieszFischer,
            a.riesz_fischer,
            a.rf_bound,
            "D injective with bounded inverse",
        ),
        LabelVerdict::decided(
            ClassLabel::Complete,
            a.complete,
            FrameBounds::none(),
            "ran(D) dense ⟺ σ surjective",
        ),
    ];

    let via_s = vec![
        LabelVerdict::decided(
            ClassLabel::Bessel,
            a.bessel,
            a.bessel_bound,
            "dom(S) = H ⟺ sup_n s_n² < ∞",
        ),
        LabelVerdict::decided(
            ClassLabel::LowerFrameSequence,
            a.lower_frame,
            a.lower_bound,
            "S injective with ran(C) closed",
        ),
        frame_sequence_verdict(&a, "ran(S) closed"),
        LabelVerdict::decided(
            ClassLabel::Frame,
            a.frame,
            a.frame_bounds,
            "S surjective",
        ),
        LabelVerdict::decided(
            ClassLabel::RieszBasis,
            a.riesz_basis,
            a.frame_bounds,
            "S bijective with (S⁻¹ψ_k) biorthogonal",
        ),
        LabelVerdict::undecided(
            ClassLabel::RieszFischer,
            "S does not distinguish Riesz–Fischer sequences",
        ),
        LabelVerdict::decided(
            ClassLabel::Complete,
            a.complete,
            FrameBounds::none(),
            "S injective ⟺ σ surjective",
        ),
    ];

    // Gram route: spectrum of G is {s_n over the fibers} plus zeros from
    // redundancy. Completeness is invisible here.
    let gram_invertible = a.bessel && s.sigma_injective() && s.inf_weight_sq().is_positive();
    let via_g = vec![
        LabelVerdict::decided(
            ClassLabel::Bessel,
            a.bessel,
            a.bessel_bound,
            "dom(G) = ℓ² ⟺ sup_n s_n < ∞",
        ),
        LabelVerdict::undecided(
            ClassLabel::LowerFrameSequence,
            "no Gram criterion for the lower frame condition is known",
        ),
        frame_sequence_verdict(&a, "G invertible on ran(C)"),
        if a.bessel {
            LabelVerdict::undecided(
                ClassLabel::Frame,
                "the Gram matrix cannot decide completeness",
            )
        } else {
            LabelVerdict::decided(
                ClassLabel::Frame,
                false,
                FrameBounds::none(),
                "G unbounded, so not even Bessel",
            )
        },
        if gram_invertible {
            LabelVerdict::undecided(
                ClassLabel::RieszBasis,
                "G invertible, but the Gram matrix cannot decide completeness",
            )
        } else {
            LabelVerdict::decided(
                ClassLabel::RieszBasis,
                false,
                FrameBounds::none(),
                "G not boundedly invertible on ℓ²",
            )
        },
        LabelVerdict::decided(
            ClassLabel::RieszFischer,
            a.riesz_fischer,
            a.rf_bound,
            "Gram sections bounded below ⟺ σ injective with inf w² > 0",
        ),
        LabelVerdict::undecided(
            ClassLabel::Complete,
            "the Gram matrix cannot decide completeness",
        ),
    ];

    let (consensus, agreement) = build_consensus(&via_c, &via_d, &via_s, &via_g);
    ClassificationReport {
        via_c,
        via_d,
        via_s,
        via_g,
        consensus,
        agreement,
        borderline: false,
        tol: Tolerance::for_dims(1, 1),
    }
}

#[cfg(test)]
mod tests {
    use crate::ext_real::ExtReal;
    use crate::sequence::fixture;

    use super::*;

    fn sequence(id: &str) -> StructuredSequence {
        fixture(id).unwrap().sequence
    }

    #[test]
    fn linear_weights_fixture() {
        // R5: not Bessel, lower frame sequence with A = 1, complete,
        // Riesz–Fischer with A = 1.
        let report = classify_structured(&sequence("R5"));
        assert_eq!(report.holds(ClassLabel::Bessel), Some(false));
        assert_eq!(report.holds(ClassLabel::LowerFrameSequence), Some(true));
        assert_eq!(
            report.bounds(ClassLabel::LowerFrameSequence).lower,
            Some(ExtReal::Finite(1.0))
        );
        assert_eq!(report.holds(ClassLabel::Complete), Some(true));
        assert_eq!(report.holds(ClassLabel::RieszFischer), Some(true));
        assert_eq!(
            report.bounds(ClassLabel::RieszFischer).lower,
            Some(ExtReal::Finite(1.0))
        );
        assert!(report.agreement);
    }

    #[test]
    fn harmonic_weights_fixture() {
        // R6: Bessel with B = 1, not a lower frame sequence, complete.
        let report = classify_structured(&sequence("R6"));
        assert_eq!(report.holds(ClassLabel::Bessel), Some(true));
        assert_eq!(
            report.bounds(ClassLabel::Bessel).upper,
            Some(ExtReal::Finite(1.0))
        );
        assert!(report.bounds(ClassLabel::Bessel).optimal);
        assert_eq!(report.holds(ClassLabel::LowerFrameSequence), Some(false));
        assert_eq!(report.holds(ClassLabel::Complete), Some(true));
        assert_eq!(report.holds(ClassLabel::RieszFischer), Some(false));
    }

    #[test]
    fn constant_repetition_fixture() {
        // R4: not Bessel, not complete, not Riesz–Fischer.
        let report = classify_structured(&sequence("R4"));
        assert_eq!(report.holds(ClassLabel::Bessel), Some(false));
        assert_eq!(report.holds(ClassLabel::Complete), Some(false));
        assert_eq!(report.holds(ClassLabel::RieszFischer), Some(false));
        assert_eq!(report.holds(ClassLabel::LowerFrameSequence), Some(false));
    }

    #[test]
    fn shifted_basis_fixture() {
        // R7: frame sequence with unit bounds, Riesz–Fischer, incomplete;
        // the Gram route must leave completeness undecided.
        let report = classify_structured(&sequence("R7"));
        assert_eq!(report.holds(ClassLabel::FrameSequence), Some(true));
        assert_eq!(report.holds(ClassLabel::Complete), Some(false));
        assert_eq!(report.holds(ClassLabel::RieszFischer), Some(true));
        let gram_complete = report
            .via_g
            .iter()
            .find(|v| v.label == ClassLabel::Complete)
            .unwrap();
        assert_eq!(gram_complete.holds, None);
    }

    #[test]
    fn canonical_onb_is_riesz_basis() {
        let report = classify_structured(&StructuredSequence::canonical_onb());
        assert_eq!(report.holds(ClassLabel::RieszBasis), Some(true));
        assert_eq!(report.holds(ClassLabel::Frame), Some(true));
        assert!(report.agreement);
    }

    #[test]
    fn repeating_segments_fixture_not_bessel() {
        // R1: every fiber sum infinite — a (trivial) lower frame sequence
        // but nowhere near Bessel.
        let report = classify_structured(&sequence("R1"));
        assert_eq!(report.holds(ClassLabel::Bessel), Some(false));
        assert_eq!(report.holds(ClassLabel::LowerFrameSequence), Some(true));
        assert_eq!(
            report.bounds(ClassLabel::LowerFrameSequence).lower,
            Some(ExtReal::Infinite)
        );
        assert_eq!(report.holds(ClassLabel::RieszBasis), Some(false));
    }

    #[test]
    fn taxonomy_implications_hold_for_all_fixtures() {
        for fx in crate::sequence::gallery() {
            let report = classify_structured(&fx.sequence);
            assert!(report.agreement, "{}", fx.id);
            for verdict in &report.consensus {
                if verdict.holds == Some(true) {
                    for implied in verdict.label.implies() {
                        assert_ne!(
                            report.holds(*implied),
                            Some(false),
                            "{}: {} should imply {implied}",
                            fx.id,
                            verdict.label
                        );
                    }
                }
            }
        }
    }
}
